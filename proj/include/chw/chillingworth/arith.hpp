#pragma once

#include <string>
#include <vector>

#include "chw/linalg/rational.hpp"

namespace chw::ch {

using linalg::Integer;
using linalg::Rational;

// d on the Dehn twist along a genus-h bounding simple closed curve.
Integer casson_morita_bscc(int h);

struct CassonMoritaValues {
  // d(BSCC of genus h) for h = 1..max_h.
  std::vector<Integer> bscc;
  // d(T_{gamma_2'}) and d(T_{gamma_3'}), taken as inputs.
  Integer d_t2 = 11, d_t3 = 11;
  // k(T_{gamma_2'}) and k(T_{gamma_3'}) as multiples of a_3^*.
  Integer k_t2 = 3, k_t3 = 3;
  // d(B_0) = d(T2) - d(T3) - k(T2) k(T3) . tau(S, S^-1) with tau(S, S^-1) = 0.
  Integer d_b0;
  // gcd of 4h(h-1) over 2 <= h <= max_h.
  Integer image_gcd;
};

CassonMoritaValues casson_morita_values(int max_h);

// 4g(g-1) / gcd{4h(h-1)} = g(g-1)/2.
Integer euler_class_order(int genus);

struct RankFormulas {
  Integer ch_g1, ch_g1_formula;
  Integer ch_gstar, ch_gstar_formula;
  bool holds() const { return ch_g1 == ch_g1_formula && ch_gstar == ch_gstar_formula; }
};

// C(2g,3)-2g+1 against (1/3)(2g-1)(2g^2-2g-3) and C(2g,3)-2g against
// (2/3)g(2g^2-3g-2).
RankFormulas rank_formulas(int genus);
bool rank_formulas_check(int genus);

// Irreducible labels of the decomposition of Wedge^2 U at genus g.
std::vector<std::string> wedge2_u_decomposition(int genus);

}  // namespace chw::ch
