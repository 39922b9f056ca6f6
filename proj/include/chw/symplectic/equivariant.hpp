#pragma once

#include <cstddef>
#include <functional>

#include "chw/symplectic/multielem.hpp"

namespace chw::sp {

// C_k on the Wedge^k H factor at `slot`:
// x_1..x_k -> sum_{i<j} (-1)^{i+j+1} (x_i . x_j) x_1..^x_i..^x_j..x_k
MultiElem contraction(const MultiElem& x, std::size_t slot = 0);

// i^k: Wedge^k V -> V^{(x)k} on the factor at `slot`, V = H or Wedge^m H.
MultiElem canonical_inclusion(const MultiElem& x, std::size_t slot = 0);

// phi^{m,n}: Wedge^m H (x) Wedge^n H -> Wedge^{m+n} H on factors slot, slot+1.
MultiElem multiply(const MultiElem& x, std::size_t slot = 0);

// j: v1^v2^v3 -> v1 (x) v2^v3 + v2 (x) v3^v1 + v3 (x) v1^v2 on the factor at slot.
MultiElem jacobi(const MultiElem& x, std::size_t slot = 0);

// H^{(x)5} -> Wedge^2 H (x) H, x1..x5 -> (x1 . x2) (x3 ^ x4) (x) x5
MultiElem partial_contract5(const MultiElem& x);

// Applies the derivation determined by the images of basis symbols.
MultiElem apply_derivation(const MultiElem& x, const std::function<HElem(Symbol)>& image);

}  // namespace chw::sp
