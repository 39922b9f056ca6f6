#pragma once

#include <string>
#include <vector>

#include "chw/symplectic/symbol.hpp"

namespace chw::sp {

enum class FactorKind { Tensor, Wedge, Sym };

// One tensor factor. Tensor factors are single copies of H; Wedge with
// inner > 1 is an exterior power of the space Wedge^inner H.
struct Factor {
  FactorKind kind = FactorKind::Tensor;
  int arity = 1;
  int inner = 1;

  std::size_t width() const { return static_cast<std::size_t>(arity * inner); }
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct SpaceDescriptor {
  std::vector<Factor> factors;

  std::size_t width() const;
  std::size_t offset(std::size_t slot) const;
  std::string to_string() const;
  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

SpaceDescriptor make_space(std::vector<Factor> factors);
SpaceDescriptor space_h();
SpaceDescriptor space_tensor(int n);
SpaceDescriptor space_wedge(int k);
SpaceDescriptor space_sym(int k);
SpaceDescriptor space_wedge_of_wedge(int k, int m);
SpaceDescriptor tensor_product(const SpaceDescriptor& x, const SpaceDescriptor& y);

// Brings `w` to its normal form in `space` and returns the sign picked up,
// or 0 when the word vanishes (repeated entry in an alternating factor).
int normalize(const SpaceDescriptor& space, Word& w);

}  // namespace chw::sp
