#include "chw/chillingworth/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "chw/chillingworth/arith.hpp"
#include "chw/chillingworth/fixtures.hpp"
#include "chw/chillingworth/johnson.hpp"
#include "chw/chillingworth/pipeline.hpp"
#include "chw/chillingworth/smap.hpp"
#include "chw/error.hpp"
#include "chw/freelie/lyndon.hpp"
#include "chw/linalg/matrix.hpp"
#include "chw/symplectic/equivariant.hpp"
#include "chw/symplectic/weights.hpp"
#include "chw/treediag/basis.hpp"
#include "chw/treediag/random.hpp"

namespace chw::ch {

namespace {

using linalg::to_string;
using sp::sym_a;
using sp::sym_b;

// Accumulates named expected/actual pairs.
struct Compare {
  std::vector<std::string> expected, actual;
  void add(const std::string& key, const std::string& e, const std::string& a) {
    expected.push_back(key + "=" + e);
    actual.push_back(key + "=" + a);
  }
  void add(const std::string& key, const sp::MultiElem& e, const sp::MultiElem& a) {
    add(key, sp::to_sexpr(e), sp::to_sexpr(a));
  }
  void add(const std::string& key, const Integer& e, const Integer& a) { add(key, to_string(e), to_string(a)); }
  void add(const std::string& key, bool e, bool a) { add(key, std::string(e ? "true" : "false"), a ? "true" : "false"); }
};

struct Outcome {
  CheckStatus status;
  std::string expected, actual;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : "; ") + x;
  return out;
}

Outcome finish(const Compare& c) {
  auto e = join(c.expected), a = join(c.actual);
  return {e == a ? CheckStatus::Pass : CheckStatus::Fail, e, a};
}

Outcome too_small(int needed) {
  return {CheckStatus::Warn, "genus >= " + std::to_string(needed), "genus too small, skipped"};
}

Integer sz(std::size_t n) { return Integer(static_cast<unsigned long>(n)); }

Integer weyl(const std::string& label, int g) { return sp::weyl_dim(sp::IrrepLabel::parse(label), g); }

// Rank of a family of elements of one space, rows indexed by basis words.
std::size_t family_rank(const std::vector<sp::MultiElem>& xs) {
  std::map<sp::Word, std::size_t> index;
  for (const auto& x : xs)
    for (const auto& [w, c] : x.terms()) index.emplace(w, index.size());
  linalg::RatMatrix m(index.size(), xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (const auto& [w, c] : xs[j].terms()) m.set(index.at(w), j, c);
  return linalg::rank(m);
}

std::vector<sp::MultiElem> wedge3_words(int g) {
  auto alpha = sp::alphabet(g);
  std::vector<sp::MultiElem> out;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      for (std::size_t k = j + 1; k < alpha.size(); ++k) out.push_back(sp::wedge_of(g, {alpha[i], alpha[j], alpha[k]}));
  return out;
}

Outcome contraction_membership(int g) {
  Compare c;
  std::vector<std::string> ids = g >= 4 ? std::vector<std::string>{"membership.first", "membership.second"}
                                        : std::vector<std::string>{"membership.genus-three"};
  auto b = [&](int i) { return HElem::basis(g, sym_b(i)); };
  std::vector<MultiElem> built;
  if (g >= 4) {
    built.push_back(tau1_bp({{1}, b(4), 1}) + tau1_bp({{3}, b(4), -1}));
    built.push_back(tau1_bp({{2}, b(4), 1}) + tau1_bp({{3}, b(4), -1}));
  } else {
    built.push_back(tau1_bp({{1}, b(3), 1}) + tau1_bp({{2}, b(3), -1}));
  }
  for (std::size_t k = 0; k < ids.size(); ++k) {
    auto x = fixture_multi(ids[k], g);
    c.add(ids[k] + " value", x, built[k]);
    c.add(ids[k] + " C3", std::string("0"), sp::to_sexpr(sp::contraction(x)));
    c.add(ids[k] + " in Ch", true, in_Ch(x));
  }
  auto genus_one = tau1_bp({{1}, b(2), 1});
  c.add("genus-one BP class", sp::to_sexpr(Rational(2) * b(2)), sp::to_sexpr(chillingworth_class(genus_one)));
  c.add("genus-one BP in Ch", false, in_Ch(genus_one));
  return finish(c);
}

Outcome u_basis_rank(int g) {
  Compare c;
  auto u = u_basis(g);
  Integer expected = binomial(2 * g, 3) - 2 * g;
  c.add("count", expected, sz(u.size()));
  std::size_t killed = 0;
  for (const auto& x : u) killed += in_Ch(x);
  c.add("killed by C3", expected, sz(killed));
  c.add("rank", expected, sz(family_rank(u)));
  std::vector<MultiElem> images;
  for (const auto& w : wedge3_words(g)) images.push_back(sp::contraction(w));
  c.add("dim Ker C3", expected, binomial(2 * g, 3) - sz(family_rank(images)));
  auto all = u;
  for (auto& x : complement_basis(g)) all.push_back(std::move(x));
  c.add("rank of (i)-(iv)", binomial(2 * g, 3), sz(family_rank(all)));
  return finish(c);
}

Outcome torelli_quotient(int g) {
  auto f = torelli_mod_ch(g);
  std::vector<std::string> e(2 * g, std::to_string(g - 1)), a;
  for (const auto& d : f) a.push_back(to_string(d));
  Compare c;
  c.add("nontrivial invariant factors", "[" + join(e) + "]", "[" + join(a) + "]");
  return finish(c);
}

void add_trace(Compare& c, const PipelineRun& run) {
  for (const auto& t : run.trace)
    if (t.matches) c.add(t.fixture, sp::to_sexpr(fixture_multi(t.fixture, t.value.genus())), sp::to_sexpr(t.value));
}

Outcome cycle_2211_check(int g) {
  if (g < 4) return too_small(4);
  Compare c;
  auto x = cycle_2211(g);
  c.add("cycle-2211.input", fixture_multi("cycle-2211.input", g), x);
  c.add("cycle-2211.expanded", fixture_multi("cycle-2211.expanded", g), x);
  c.add("in Wedge^2 U", true, in_wedge2_u(x));
  auto p = pipeline_2211(g);
  auto run = run_pipeline(p, x);
  add_trace(c, run);
  c.add("highest weight [" + p.target_label + "]", true,
        sp::is_highest_weight(run.result, sp::IrrepLabel::parse(p.target_label)));
  return finish(c);
}

Outcome cycle_14_check(int g) {
  if (g < 5) return too_small(5);
  Compare c;
  auto x = cycle_14(g);
  c.add("cycle-14.input", fixture_multi("cycle-14.input", g), x);
  c.add("cycle-14.expanded", fixture_multi("cycle-14.expanded", g), x);
  c.add("in Wedge^2 U", true, in_wedge2_u(x));
  auto run = run_pipeline(pipeline_14(g), x);
  add_trace(c, run);
  c.add("C6 image nonzero", true, !run.trace.at(2).value.is_zero());
  c.add("C4 image", std::string("0"), sp::to_sexpr(run.result));
  return finish(c);
}

Outcome cycle_16_check(int g) {
  if (g < 6) return too_small(6);
  Compare c;
  auto x = cycle_14(g);
  auto p = pipeline_16(g);
  auto run = run_pipeline(p, x);
  add_trace(c, run);
  c.add("highest weight [" + p.target_label + "]", true,
        sp::is_highest_weight(run.result, sp::IrrepLabel::parse(p.target_label)));
  return finish(c);
}

Outcome s_map_check(int g) {
  if (g < 4) return too_small(4);
  Compare c;
  auto xi0 = fixture_multi("smap.xi0", g);
  c.add("xi0 in Wedge^2 U", true, in_wedge2_u(xi0));
  auto expected_bracket = fixture_tree("smap.bracket", g);
  auto bracket = s_map_bracket(xi0);
  c.add("bracket", tree::to_sexpr(expected_bracket), tree::to_sexpr(bracket));
  auto drawn = tree::tree_bracket(fixture_tree("smap.bracket-left", g), fixture_tree("smap.bracket-right", g));
  c.add("bracket of drawn tripods", tree::to_sexpr(expected_bracket), tree::to_sexpr(drawn));
  auto first = fixture("smap.q-first", g);
  auto h = [&](sp::Symbol s) { return HElem::basis(g, s); };
  // The four trees carry q values +-2 (b_k . a_k)(a2 ^ a1) with signs +, -, +, -.
  const std::vector<std::pair<tree::TreeDiagram, int>> trees = {
      {tree::htree(h(sym_a(1)), h(sym_a(2)), h(sym_a(3)), h(sym_b(3))), 1},
      {tree::htree(h(sym_a(2)), h(sym_a(1)), h(sym_a(3)), h(sym_b(3))), -1},
      {tree::htree(h(sym_a(1)), h(sym_a(2)), h(sym_a(4)), h(sym_b(4))), 1},
      {tree::htree(h(sym_a(2)), h(sym_a(1)), h(sym_a(4)), h(sym_b(4))), -1}};
  for (std::size_t k = 0; k < trees.size(); ++k) {
    tree::TreeCombo t(g, 2);
    t.add_tree(trees[k].first, trees[k].second);
    c.add("q of tree " + std::to_string(k + 1), first.multi, tree::q_map(t));
  }
  auto value = s_map(xi0);
  c.add("smap.value", fixture_multi("smap.value", g), value);
  c.add("highest weight [1,1]", true, sp::is_highest_weight(value, sp::IrrepLabel::parse("1,1")));
  return finish(c);
}

Outcome xi_check(int g, int which) {
  Compare c;
  auto xi = xi_elements(g);
  const auto& x = which == 1 ? xi.xi1 : xi.xi2;
  const auto& br = which == 1 ? xi.xi1_bracket : xi.xi2_bracket;
  std::string pre = which == 1 ? "xi1" : "xi2";
  c.add("bracket form equals trees", true, tree::is_zero_mod_relations(x - br));
  c.add(pre + " nonzero", true, !tree::is_zero_mod_relations(x));
  c.add(pre + ".detection", fixture_multi(pre + ".detection", g), detection(x));
  c.add("tr3", std::string("0"), sp::to_sexpr(tree::tr3(x)));
  return finish(c);
}

// Desk-scale genus for the tree rank computations.
int tr3_genus(int g) { return std::min(g, 4); }
int eta_genus(int g) { return std::min(g, 3); }

Outcome tr3_kernel(int g) {
  Compare c;
  const int gg = tr3_genus(g);
  auto r = tree::tr3_rank(gg);
  std::string at = " at genus " + std::to_string(gg);
  c.add("image rank" + at, weyl("3", gg), sz(r.image_rank));
  c.add("kernel dim" + at, weyl("3,1,1", gg) + weyl("2,1", gg), sz(r.kernel_dim()));
  return finish(c);
}

Outcome eta_iso_rank(int g) {
  Compare c;
  for (int gg = 2; gg <= eta_genus(g); ++gg)
    for (int d = 1; d <= 3; ++d) {
      auto r = tree::eta_rank(gg, d);
      Integer target = 2 * gg * lie::witt_dim(gg, d + 1) - lie::witt_dim(gg, d + 2);
      c.add("rank eta on T_" + std::to_string(d) + " at genus " + std::to_string(gg), target, sz(r.rank));
    }
  return finish(c);
}

Outcome bch_conjugation(int) {
  const int g = 2, samples = 50;
  std::mt19937 rng(20240);
  int ok = 0;
  for (int k = 0; k < samples; ++k) {
    auto f = tree::random_graded(g, 1, 3, rng);
    auto h = tree::random_graded(g, 2, 3, rng);
    ok += tree::conjugation_identity_check(f, h);
  }
  Compare c;
  c.add("samples passing at genus 2", std::to_string(samples), std::to_string(ok));
  return finish(c);
}

Outcome dim_decomposition(int g) {
  Compare c;
  Integer u = binomial(2 * g, 3) - 2 * g, sum = 0;
  std::string labels;
  for (const auto& l : wedge2_u_decomposition(g)) {
    sum += weyl(l, g);
    labels += "[" + l + "]";
  }
  c.add("dim Wedge^2 U vs sum over " + labels, u * (u - 1) / 2, sum);
  return finish(c);
}

Outcome casson_morita(int g) {
  Compare c;
  auto v = casson_morita_values(g);
  for (int h = 1; h <= g; ++h) c.add("d(BSCC genus " + std::to_string(h) + ")", Integer(4 * h * (h - 1)), v.bscc[h - 1]);
  c.add("d(T2')", Integer(11), v.d_t2);
  c.add("d(B0)", Integer(0), v.d_b0);
  c.add("image gcd", Integer(8), v.image_gcd);
  return finish(c);
}

Outcome euler_order(int g) {
  Compare c;
  c.add("order", Integer(g * (g - 1) / 2), euler_class_order(g));
  return finish(c);
}

Outcome rank_formulas_outcome(int g) {
  Compare c;
  auto r = rank_formulas(g);
  c.add("rank Ch_{g,1}^ab", r.ch_g1_formula, r.ch_g1);
  c.add("rank Ch_{g,*}^ab", r.ch_gstar_formula, r.ch_gstar);
  return finish(c);
}

using CheckFn = std::function<Outcome(int)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = {
      {"contraction-membership", contraction_membership},
      {"u-basis-rank", u_basis_rank},
      {"torelli-quotient-snf", torelli_quotient},
      {"cycle-2211", cycle_2211_check},
      {"cycle-14", cycle_14_check},
      {"cycle-16", cycle_16_check},
      {"s-map-12", s_map_check},
      {"xi1-detection", [](int g) { return xi_check(g, 1); }},
      {"xi2-detection", [](int g) { return xi_check(g, 2); }},
      {"tr3-kernel", tr3_kernel},
      {"eta-iso-rank", eta_iso_rank},
      {"bch-conjugation", bch_conjugation},
      {"dim-decomposition", dim_decomposition},
      {"casson-morita-values", casson_morita},
      {"euler-order", euler_order},
      {"rank-formulas", rank_formulas_outcome},
  };
  return r;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Warn:
      return "warn";
  }
  return "fail";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

bool is_check_name(const std::string& name) {
  const auto& n = check_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

CheckReport run_check(const std::string& name, int genus) {
  if (genus < kMinVerifyGenus || genus > kMaxVerifyGenus)
    throw UnsupportedGenus("checks support genus " + std::to_string(kMinVerifyGenus) + ".." +
                           std::to_string(kMaxVerifyGenus));
  for (const auto& [n, f] : registry()) {
    if (n != name) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o = f(genus);
    auto stop = std::chrono::steady_clock::now();
    return {n, genus, o.status, o.expected, o.actual,
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count()};
  }
  throw Error("unknown check " + name);
}

std::vector<CheckReport> verify_all(int genus, const std::vector<std::string>& filter) {
  for (const auto& f : filter)
    if (!is_check_name(f)) throw Error("unknown check " + f);
  std::vector<CheckReport> out;
  for (const auto& n : check_names())
    if (filter.empty() || std::find(filter.begin(), filter.end(), n) != filter.end()) out.push_back(run_check(n, genus));
  return out;
}

}  // namespace chw::ch
