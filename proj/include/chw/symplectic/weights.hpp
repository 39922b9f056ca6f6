#pragma once

#include <string>
#include <vector>

#include "chw/symplectic/multielem.hpp"

namespace chw::sp {

using Weight = std::vector<int>;

// Weight of a basis word; a_i contributes +e_i and b_i contributes -e_i.
Weight weight_of(const Word& w, int genus);

// Partition label of an irreducible Sp-representation; [0] is trivial.
struct IrrepLabel {
  std::vector<int> parts;

  static IrrepLabel parse(const std::string& text);
  std::string to_string() const;
  std::size_t length() const;
  Weight as_weight(int genus) const;
  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

// Images of the raising operator for the simple root with index 1..g.
// i < g: a_{i+1} -> a_i, b_i -> -b_{i+1}; i = g: b_g -> a_g.
HElem raising_image(int genus, int root, Symbol s);
MultiElem raise(const MultiElem& x, int root);

bool is_weight_vector(const MultiElem& x, const Weight& w);
bool is_highest_weight(const MultiElem& x, const IrrepLabel& label);

// Weyl dimension for Sp(2g). Labels longer than g index no irreducible
// representation and give 0.
linalg::Integer weyl_dim(const IrrepLabel& label, int genus);

}  // namespace chw::sp
