#include "chw/chillingworth/arith.hpp"

#include "chw/chillingworth/johnson.hpp"
#include "chw/error.hpp"

namespace chw::ch {

namespace {

Integer exact(const Rational& q) {
  if (q.get_den() != 1) throw Error("rank formula is not an integer");
  return q.get_num();
}

}  // namespace

Integer casson_morita_bscc(int h) { return Integer(4 * h) * (h - 1); }

CassonMoritaValues casson_morita_values(int max_h) {
  CassonMoritaValues v;
  for (int h = 1; h <= max_h; ++h) {
    v.bscc.push_back(casson_morita_bscc(h));
    if (h >= 2) mpz_gcd(v.image_gcd.get_mpz_t(), v.image_gcd.get_mpz_t(), v.bscc.back().get_mpz_t());
  }
  const Integer tau_s_sinv = 0;
  v.d_b0 = v.d_t2 - v.d_t3 - v.k_t2 * v.k_t3 * tau_s_sinv;
  return v;
}

Integer euler_class_order(int g) {
  if (g < 2) throw UnsupportedGenus("euler class order needs genus >= 2");
  auto v = casson_morita_values(g);
  return casson_morita_bscc(g) / v.image_gcd;
}

RankFormulas rank_formulas(int g) {
  RankFormulas r;
  const Integer G = g;
  r.ch_g1 = binomial(2 * g, 3) - 2 * g + 1;
  r.ch_g1_formula = exact(Rational(1) / 3 * Rational((2 * G - 1) * (2 * G * G - 2 * G - 3)));
  r.ch_gstar = binomial(2 * g, 3) - 2 * g;
  r.ch_gstar_formula = exact(Rational(2) / 3 * Rational(G * (2 * G * G - 3 * G - 2)));
  return r;
}

bool rank_formulas_check(int g) { return rank_formulas(g).holds(); }

std::vector<std::string> wedge2_u_decomposition(int g) {
  if (g < 3) throw UnsupportedGenus("Wedge^2 U needs genus >= 3");
  std::vector<std::string> labels = {"0", "2,2"};
  if (g >= 4) labels.insert(labels.end(), {"1,1", "2,2,1,1"});
  if (g >= 5) labels.push_back("1,1,1,1");
  if (g >= 6) labels.push_back("1,1,1,1,1,1");
  return labels;
}

}  // namespace chw::ch
