#include <gtest/gtest.h>

#include "chw/chillingworth/arith.hpp"
#include "chw/chillingworth/checks.hpp"
#include "chw/chillingworth/fixtures.hpp"
#include "chw/chillingworth/johnson.hpp"
#include "chw/chillingworth/pipeline.hpp"
#include "chw/chillingworth/smap.hpp"
#include "chw/error.hpp"
#include "chw/linalg/matrix.hpp"
#include "chw/symplectic/equivariant.hpp"
#include "chw/symplectic/weights.hpp"

using namespace chw::ch;
using chw::sp::Symbol;
using chw::sp::sym_a;
using chw::sp::sym_b;
using chw::sp::wedge_of;

namespace {

constexpr Symbol a(int i) { return sym_a(i); }
constexpr Symbol b(int i) { return sym_b(i); }

HElem h(int g, Symbol s, Rational c = 1) { return HElem::basis(g, s, c); }
MultiElem w3(int g, Symbol x, Symbol y, Symbol z, Rational c = 1) { return wedge_of(g, {x, y, z}, c); }
MultiElem ww(const MultiElem& x, const MultiElem& y) { return chw::sp::outer_wedge({x, y}); }
MultiElem tt(const MultiElem& x, const MultiElem& y) { return chw::sp::tensor(x, y); }

// Rank of C_3 on all of Wedge^3 H by dense row reduction.
std::size_t c3_rank(int g) {
  auto alpha = chw::sp::alphabet(g);
  std::vector<MultiElem> cols;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      for (std::size_t k = j + 1; k < alpha.size(); ++k)
        cols.push_back(chw::sp::contraction(wedge_of(g, {alpha[i], alpha[j], alpha[k]})));
  chw::linalg::RatMatrix m(alpha.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [w, x] : cols[c].terms())
      m.set(std::find(alpha.begin(), alpha.end(), w[0]) - alpha.begin(), c, x);
  return chw::linalg::rank(m);
}

std::size_t span_rank(const std::vector<MultiElem>& xs) {
  std::map<chw::sp::Word, std::size_t> idx;
  for (const auto& x : xs)
    for (const auto& [w, c] : x.terms()) idx.emplace(w, idx.size());
  chw::linalg::RatMatrix m(idx.size(), xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (const auto& [w, c] : xs[j].terms()) m.set(idx.at(w), j, c);
  return chw::linalg::rank(m);
}

}  // namespace

TEST(Tau1Bp, Examples) {
  const int g = 4;
  EXPECT_EQ(tau1_bp({{1}, h(g, b(4)), 1}), w3(g, a(1), b(1), b(4)));
  EXPECT_TRUE(tau1_bp({{}, h(g, b(4)), 1}).is_zero());
  EXPECT_EQ(tau1_bp({{3}, h(g, b(4)), -1}), w3(g, a(3), b(3), b(4), -1));
  EXPECT_EQ(tau1_bp({{1, 2}, h(g, b(4)), 2}), w3(g, a(1), b(1), b(4), 2) + w3(g, a(2), b(2), b(4), 2));
}

TEST(Chillingworth, ClassAndMembership) {
  const int g = 4;
  auto t = w3(g, a(1), b(1), b(4)) - w3(g, a(3), b(3), b(4));
  EXPECT_TRUE(chillingworth_class(t).is_zero());
  EXPECT_TRUE(in_Ch(t));
  EXPECT_TRUE(in_Ch(w3(g, a(2), b(2), b(4)) - w3(g, a(3), b(3), b(4))));
  auto genus_one = w3(g, a(1), b(1), a(3));
  EXPECT_EQ(chillingworth_class(genus_one), h(g, a(3), 2));
  EXPECT_FALSE(in_Ch(genus_one));
  EXPECT_TRUE(in_Ch(MultiElem(g, chw::sp::space_wedge(3))));
}

TEST(UBasis, FamiliesCountAndSpan) {
  EXPECT_THROW(u_basis(2), chw::UnsupportedGenus);
  for (int g = 3; g <= 6; ++g) {
    auto u = u_basis(g);
    EXPECT_EQ(Integer(static_cast<unsigned long>(u.size())), binomial(2 * g, 3) - 2 * g);
    for (const auto& x : u) EXPECT_TRUE(in_Ch(x));
    EXPECT_EQ(span_rank(u), u.size());
    EXPECT_EQ(Integer(static_cast<unsigned long>(u.size())),
              binomial(2 * g, 3) - Integer(static_cast<unsigned long>(c3_rank(g))));
    auto all = u;
    for (const auto& x : complement_basis(g)) all.push_back(x);
    EXPECT_EQ(Integer(static_cast<unsigned long>(span_rank(all))), binomial(2 * g, 3));
  }
  EXPECT_EQ(u_basis(6).size(), 208u);
  auto u = u_basis(3);
  auto has = [&](const MultiElem& x) { return std::find(u.begin(), u.end(), x) != u.end(); };
  EXPECT_TRUE(has(w3(3, a(1), a(2), a(3))));
  EXPECT_TRUE(has(w3(3, a(1), a(2), b(2)) - w3(3, a(1), a(3), b(3))));
  EXPECT_TRUE(chw::sp::contraction(w3(3, a(1), a(2), b(2)) - w3(3, a(1), a(3), b(3))).is_zero());
}

TEST(TorelliQuotient, InvariantFactors) {
  for (int g = 3; g <= 8; ++g) EXPECT_EQ(torelli_mod_ch(g), std::vector<Integer>(2 * g, Integer(g - 1))) << g;
}

TEST(AbelianCycle, Examples) {
  const int g = 4;
  auto P = w3(g, a(1), b(1), b(4)), Q = w3(g, a(2), b(2), b(4)), R = w3(g, a(3), b(3), b(4));
  EXPECT_EQ(abelian_cycle(P - R, Q - R), ww(P, Q) + ww(Q, R) + ww(R, P));
  EXPECT_EQ(cycle_2211(g), ww(P, Q) + ww(Q, R) + ww(R, P));
  EXPECT_TRUE(abelian_cycle(P - R, P - R).is_zero());
  EXPECT_TRUE(in_wedge2_u(cycle_2211(g)));

  const int g5 = 5;
  auto x1 = w3(g5, a(1), b(1), b(3)), x2 = w3(g5, a(2), b(2), b(3));
  auto y1 = w3(g5, a(1), b(1), b(5)), y2 = w3(g5, a(2), b(2), b(5)), y3 = w3(g5, a(3), b(3), b(5)),
       y4 = w3(g5, a(4), b(4), b(5));
  auto expected = ww(x1, y1) + ww(x1, y2) + ww(x1, y3) - Rational(3) * ww(x1, y4) - ww(x2, y1) - ww(x2, y2) -
                  ww(x2, y3) + Rational(3) * ww(x2, y4);
  EXPECT_EQ(cycle_14(g5), expected);
  EXPECT_TRUE(in_wedge2_u(expected));
  EXPECT_THROW(cycle_14(4), chw::UnsupportedGenus);
}

TEST(Fixtures, AllEntriesEvaluate) {
  EXPECT_EQ(fixture_entries().size(), 37u);
  for (const auto& e : fixture_entries()) {
    EXPECT_NO_THROW(fixture(e.id, e.min_genus)) << e.id;
    if (e.min_genus > 3) EXPECT_THROW(fixture(e.id, e.min_genus - 1), chw::UnsupportedGenus) << e.id;
  }
  EXPECT_THROW(fixture("no.such.entry", 6), chw::Error);
  EXPECT_THROW(fixture_tree("smap.xi0", 4), chw::SpaceMismatch);
}

TEST(Pipeline2211, PrintedIntermediates) {
  const int g = 4;
  auto run = run_pipeline(pipeline_2211(g), cycle_2211(g));
  EXPECT_TRUE(run.all_match);
  ASSERT_EQ(run.trace.size(), 7u);
  for (const auto& t : run.trace) EXPECT_TRUE(t.matches.value_or(false)) << t.fixture;
  auto W = w3(g, b(2), b(3), b(4));
  EXPECT_EQ(run.trace[1].value, Rational(3) * ww(w3(g, b(1), b(2), b(4)), W));
  EXPECT_EQ(run.trace[4].value, tt(wedge_of(g, {b(4), b(2), b(1), b(3)}, -6), wedge_of(g, {b(4), b(2)})));
  auto final_value = tt(wedge_of(g, {a(1), a(2), a(3), a(4)}, -6), wedge_of(g, {a(1), a(2)}));
  EXPECT_EQ(run.result, final_value);
  EXPECT_TRUE(chw::sp::is_highest_weight(run.result, chw::sp::IrrepLabel::parse("2,2,1,1")));
  EXPECT_THROW(pipeline_2211(3), chw::UnsupportedGenus);
}

TEST(Pipeline14, ContractionsDetect) {
  const int g = 5;
  auto run = run_pipeline(pipeline_14(g), cycle_14(g));
  EXPECT_TRUE(run.all_match);
  ASSERT_EQ(run.trace.size(), 4u);
  EXPECT_EQ(run.trace[2].value,
            wedge_of(g, {a(2), b(2), b(3), b(5)}, 6) - wedge_of(g, {a(1), b(1), b(3), b(5)}, 6));
  EXPECT_FALSE(run.trace[2].value.is_zero());
  EXPECT_TRUE(run.result.is_zero());
}

TEST(Pipeline16, FinalHighestWeight) {
  const int g = 6;
  auto run = run_pipeline(pipeline_16(g), cycle_14(g));
  EXPECT_TRUE(run.all_match);
  EXPECT_EQ(run.trace[1].value, Rational(6) * ww(w3(g, b(1), b(2), b(3)), w3(g, b(4), b(5), b(6))));
  EXPECT_EQ(run.result, wedge_of(g, {a(1), a(2), a(3), a(4), a(5), a(6)}, 12));
  EXPECT_TRUE(chw::sp::is_highest_weight(run.result, chw::sp::IrrepLabel::parse("1,1,1,1,1,1")));
}

TEST(Pipeline, SpaceMismatchAndLargerGenus) {
  PipelineStep mul{StepKind::Multiply, "phi", std::nullopt, 0, ""};
  EXPECT_THROW(apply_step(mul, chw::sp::basis_elem(4, chw::sp::space_h(), {a(1)})), chw::Error);
  PipelineStep bare{StepKind::Induced, "no map", std::nullopt, 0, ""};
  EXPECT_THROW(apply_step(bare, w3(4, a(1), a(2), a(3))), chw::Error);
  for (int g = 7; g <= 8; ++g) {
    EXPECT_TRUE(run_pipeline(pipeline_2211(g), cycle_2211(g)).all_match);
    EXPECT_TRUE(run_pipeline(pipeline_16(g), cycle_14(g)).all_match);
  }
}

TEST(SMap, Examples) {
  const int g = 4;
  auto xi0 = ww(w3(g, a(1), a(3), b(3)) - w3(g, a(1), a(4), b(4)), w3(g, a(2), a(3), b(3)) - w3(g, a(2), a(4), b(4)));
  EXPECT_EQ(s_map(xi0), wedge_of(g, {a(1), a(2)}, 8));
  EXPECT_TRUE(chw::tree::is_zero_mod_relations(s_map_bracket(xi0) - fixture_tree("smap.bracket", g)));
  const int g6 = 6;
  EXPECT_TRUE(s_map(ww(w3(g6, a(1), a(2), a(3)), w3(g6, b(4), b(5), b(6)))).is_zero());
  auto t = w3(g, a(1), a(2), a(3));
  EXPECT_TRUE(s_map(ww(t, t)).is_zero());
  EXPECT_THROW(s_map(ww(w3(g, a(1), b(1), a(2)), t)), chw::DomainError);
  EXPECT_THROW(s_map(t), chw::SpaceMismatch);
}

TEST(SMap, TripodPreimageInvertsEta) {
  const int g = 3;
  for (const auto& x : u_basis(g)) {
    auto t = tripod_preimage(x);
    MultiElem back(g, chw::sp::space_tensor(3));
    for (const auto& [w, c] : chw::tree::eta_tensor(t)) back.add_word(w, c);
    // eta(x ^ y ^ z) = x (x) [y,z] + y (x) [z,x] + z (x) [x,y]
    auto expect = chw::sp::jacobi(x);
    MultiElem flat(g, chw::sp::space_tensor(3));
    for (const auto& [w, c] : expect.terms()) {
      flat.add_word(w, c);
      chw::sp::Word s{w[0], w[2], w[1]};
      flat.add_word(s, -c);
    }
    EXPECT_EQ(back, flat);
  }
}

TEST(Xi, ElementsAndDetection) {
  EXPECT_THROW(xi_elements(2), chw::UnsupportedGenus);
  auto xi = xi_elements(3);
  EXPECT_FALSE(xi.xi0.has_value());
  EXPECT_TRUE(xi_elements(4).xi0.has_value());
  auto det1 = chw::sp::basis_elem(3, chw::sp::tensor_product(chw::sp::space_wedge(2), chw::sp::space_h()),
                                  {a(1), a(2), a(1)}, 9);
  EXPECT_EQ(detection(xi.xi1), det1);
  EXPECT_TRUE(detection(xi.xi2).is_zero());
  EXPECT_FALSE(chw::tree::is_zero_mod_relations(xi.xi2));
  EXPECT_TRUE(chw::tree::tr3(xi.xi1).is_zero());
  EXPECT_TRUE(chw::tree::tr3(xi.xi2).is_zero());
  EXPECT_THROW(detection(chw::tree::TreeCombo(3, 2)), chw::DomainError);
}

TEST(Arithmetic, CassonMoritaAndOrders) {
  EXPECT_EQ(casson_morita_bscc(1), 0);
  EXPECT_EQ(casson_morita_bscc(2), 8);
  auto v = casson_morita_values(8);
  EXPECT_EQ(v.d_b0, 0);
  EXPECT_EQ(v.d_t2, 11);
  EXPECT_EQ(v.image_gcd, 8);
  for (int g = 2; g <= 12; ++g) EXPECT_EQ(euler_class_order(g), g * (g - 1) / 2);
  EXPECT_EQ(euler_class_order(6), 15);
  auto r = rank_formulas(6);
  EXPECT_EQ(r.ch_g1, 209);
  EXPECT_EQ(r.ch_gstar, 208);
  for (int g = 3; g <= 20; ++g) EXPECT_TRUE(rank_formulas_check(g));
}

TEST(Arithmetic, WedgeSquareDecomposition) {
  for (int g = 3; g <= 8; ++g) {
    Integer u = binomial(2 * g, 3) - 2 * g, sum = 0;
    for (const auto& l : wedge2_u_decomposition(g)) sum += chw::sp::weyl_dim(chw::sp::IrrepLabel::parse(l), g);
    EXPECT_EQ(sum, u * (u - 1) / 2);
    if (g == 6) EXPECT_EQ(sum, 21528);
  }
  EXPECT_THROW(wedge2_u_decomposition(2), chw::UnsupportedGenus);
}

TEST(VerifyAll, GenusSixPasses) {
  auto reports = verify_all(6);
  ASSERT_EQ(reports.size(), 16u);
  for (std::size_t k = 0; k < reports.size(); ++k) {
    EXPECT_EQ(reports[k].name, check_names()[k]);
    EXPECT_EQ(reports[k].status, CheckStatus::Pass) << reports[k].name << "\n" << reports[k].actual;
    EXPECT_EQ(reports[k].expected, reports[k].actual);
  }
}

TEST(VerifyAll, SmallGenusWarnsAndErrors) {
  auto reports = verify_all(3);
  std::vector<std::string> warned;
  for (const auto& r : reports) {
    EXPECT_NE(r.status, CheckStatus::Fail) << r.name;
    if (r.status == CheckStatus::Warn) warned.push_back(r.name);
  }
  EXPECT_EQ(warned, (std::vector<std::string>{"cycle-2211", "cycle-14", "cycle-16", "s-map-12"}));
  EXPECT_THROW(verify_all(2), chw::UnsupportedGenus);
  EXPECT_THROW(verify_all(9), chw::UnsupportedGenus);
  EXPECT_THROW(verify_all(6, {"no-such-check"}), chw::Error);
  auto one = verify_all(4, {"euler-order"});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].status, CheckStatus::Pass);
}
