#include "chw/chillingworth/pipeline.hpp"

#include "chw/chillingworth/fixtures.hpp"
#include "chw/chillingworth/johnson.hpp"
#include "chw/error.hpp"
#include "chw/symplectic/equivariant.hpp"

namespace chw::ch {

using sp::HElem;
using sp::LinMap;
using sp::sym_a;
using sp::sym_b;

namespace {

void require_genus(int genus, int min, const char* what) {
  if (genus < min) throw UnsupportedGenus(std::string(what) + " needs genus >= " + std::to_string(min));
}

HElem A(int g, int i) { return HElem::basis(g, sym_a(i)); }
HElem B(int g, int i) { return HElem::basis(g, sym_b(i)); }

BPSpec bp(int g, std::vector<int> span, int index, long mult = 1) {
  return BPSpec{std::move(span), B(g, index), Integer(mult)};
}

PipelineStep difference(const HElem& v, std::string label, std::string fixture) {
  return {StepKind::InducedDifference, std::move(label), LinMap::transvection(v), 0, std::move(fixture)};
}

PipelineStep plain(StepKind kind, std::string label, std::size_t slot, std::string fixture) {
  return {kind, std::move(label), std::nullopt, slot, std::move(fixture)};
}

// b_i -> a_i, a_i -> -b_i
LinMap swap_ab(int g) {
  LinMap f(g);
  for (int i = 1; i <= g; ++i) {
    f.set_image(sym_b(i), A(g, i));
    f.set_image(sym_a(i), Rational(-1) * B(g, i));
  }
  return f;
}

}  // namespace

MultiElem apply_step(const PipelineStep& step, const MultiElem& x) {
  switch (step.kind) {
    case StepKind::InducedDifference:
      if (!step.map) throw Error("step " + step.label + " has no map");
      return x - sp::induced(*step.map, x);
    case StepKind::Induced:
      if (!step.map) throw Error("step " + step.label + " has no map");
      return sp::induced(*step.map, x);
    case StepKind::CanonicalInclusion:
      return sp::canonical_inclusion(x, step.slot);
    case StepKind::Jacobi:
      return sp::jacobi(x, step.slot);
    case StepKind::Multiply:
      return sp::multiply(x, step.slot);
    case StepKind::Contraction:
      return sp::contraction(x, step.slot);
    case StepKind::PartialContract5:
      return sp::partial_contract5(x);
  }
  throw Error("unknown step kind");
}

PipelineRun run_pipeline(const Pipeline& p, const MultiElem& x) {
  PipelineRun run;
  run.result = x;
  for (const auto& step : p.steps) {
    run.result = apply_step(step, run.result);
    TraceEntry e{step.label, run.result, step.fixture, std::nullopt};
    if (!step.fixture.empty()) {
      e.matches = fixture_multi(step.fixture, x.genus()) == run.result;
      run.all_match = run.all_match && *e.matches;
    }
    run.trace.push_back(std::move(e));
  }
  return run;
}

MultiElem cycle_2211(int g) {
  require_genus(g, 4, "the [2^2 1^2] cycle");
  auto t1 = tau1_bp(bp(g, {1}, 4)) + tau1_bp(bp(g, {3}, 4, -1));
  auto t2 = tau1_bp(bp(g, {2}, 4)) + tau1_bp(bp(g, {3}, 4, -1));
  return abelian_cycle(t1, t2);
}

MultiElem cycle_14(int g) {
  require_genus(g, 5, "the [1^4] cycle");
  auto t1 = tau1_bp(bp(g, {1}, 3)) + tau1_bp(bp(g, {2}, 3, -1));
  auto t2 = tau1_bp(bp(g, {1, 2, 3}, 5)) + tau1_bp(bp(g, {4}, 5, -3));
  return abelian_cycle(t1, t2);
}

Pipeline pipeline_2211(int g) {
  require_genus(g, 4, "pipeline [2^2 1^2]");
  LinMap relabel(g);
  for (auto [from, to] : {std::pair{4, 1}, {1, 3}, {3, 4}}) {
    relabel.set_image(sym_a(from), A(g, to));
    relabel.set_image(sym_b(from), B(g, to));
  }
  Pipeline p{"cycle-2211", g, "cycle-2211.input", {}, "2,2,1,1"};
  p.steps.push_back(difference(B(g, 2) - B(g, 3), "id - T(b2 - b3)", "cycle-2211.step1"));
  p.steps.push_back(difference(B(g, 1) - B(g, 2), "id - T(b1 - b2)", "cycle-2211.step2"));
  p.steps.push_back(plain(StepKind::CanonicalInclusion, "i^2", 0, "cycle-2211.inclusion"));
  p.steps.push_back(plain(StepKind::Jacobi, "id (x) j", 1, "cycle-2211.jacobi"));
  p.steps.push_back(plain(StepKind::Multiply, "phi^{3,1} (x) id", 0, "cycle-2211.multiply"));
  p.steps.push_back({StepKind::Induced, "relabel", relabel, 0, "cycle-2211.relabel"});
  p.steps.push_back({StepKind::Induced, "b -> a, a -> -b", swap_ab(g), 0, "cycle-2211.final"});
  return p;
}

Pipeline pipeline_14(int g) {
  require_genus(g, 5, "pipeline [1^4]");
  Pipeline p{"cycle-14", g, "cycle-14.input", {}, ""};
  p.steps.push_back(plain(StepKind::CanonicalInclusion, "i^2", 0, "cycle-14.inclusion"));
  p.steps.push_back(plain(StepKind::Multiply, "phi^{3,3}", 0, "cycle-14.multiply"));
  p.steps.push_back(plain(StepKind::Contraction, "C6", 0, "cycle-14.c6"));
  p.steps.push_back(plain(StepKind::Contraction, "C4", 0, "cycle-14.c4"));
  return p;
}

Pipeline pipeline_16(int g) {
  require_genus(g, 6, "pipeline [1^6]");
  Pipeline p{"cycle-16", g, "cycle-14.input", {}, "1,1,1,1,1,1"};
  p.steps.push_back(difference(B(g, 4) - B(g, 6), "id - T(b4 - b6)", "cycle-16.step1"));
  p.steps.push_back(difference(B(g, 1) - B(g, 2), "id - T(b1 - b2)", "cycle-16.step2"));
  p.steps.push_back(plain(StepKind::CanonicalInclusion, "i^2", 0, "cycle-16.inclusion"));
  p.steps.push_back(plain(StepKind::Multiply, "phi^{3,3}", 0, "cycle-16.multiply"));
  p.steps.push_back({StepKind::Induced, "b -> a, a -> -b", swap_ab(g), 0, "cycle-16.final"});
  return p;
}

}  // namespace chw::ch
