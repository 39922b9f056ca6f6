#pragma once

#include <vector>

#include "chw/linalg/rational.hpp"
#include "chw/symplectic/multielem.hpp"

namespace chw::ch {

using linalg::Integer;
using linalg::Rational;
using sp::HElem;
using sp::MultiElem;

// Bounding pair data: the symplectic indices spanned by the subsurface, the
// homology class of the curves and the power of the BP map.
struct BPSpec {
  std::vector<int> span;
  HElem curve_class;
  Integer multiplicity = 1;
};

// (sum_{i in span} a_i ^ b_i) ^ [c] times the multiplicity, in Wedge^3 H.
MultiElem tau1_bp(const BPSpec& bp);

// 2 C_3(t) and the membership test C_3(t) = 0.
HElem chillingworth_class(const MultiElem& t);
bool in_Ch(const MultiElem& t);

// Integral basis of U = Ker C_3 in three families; needs g >= 3.
std::vector<MultiElem> u_basis(int genus);
// Complementary family a_i ^ a_j ^ b_j, b_i ^ a_j ^ b_j (i != j).
std::vector<MultiElem> complement_basis(int genus);

// Nontrivial invariant factors of v: H + U -> Wedge^3 H,
// (x, Y) -> sum_i a_i ^ b_i ^ x + Y.
std::vector<Integer> torelli_mod_ch(int genus);

// t1 ^ t2 in Wedge^2(Wedge^3 H).
MultiElem abelian_cycle(const MultiElem& t1, const MultiElem& t2);

// Membership of an element of Wedge^2(Wedge^3 H) in Wedge^2 U.
bool in_wedge2_u(const MultiElem& x);

Integer binomial(long n, long k);

}  // namespace chw::ch
