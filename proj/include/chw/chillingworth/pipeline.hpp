#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chw/symplectic/linmap.hpp"
#include "chw/symplectic/multielem.hpp"

namespace chw::ch {

using sp::MultiElem;

enum class StepKind { InducedDifference, Induced, CanonicalInclusion, Jacobi, Multiply, Contraction, PartialContract5 };

struct PipelineStep {
  StepKind kind = StepKind::Induced;
  std::string label;
  // Used by InducedDifference (x -> x - f(x)) and Induced.
  std::optional<sp::LinMap> map;
  std::size_t slot = 0;
  // Fixture holding the printed value after this step, if any.
  std::string fixture;
};

struct Pipeline {
  std::string name;
  int genus = 3;
  std::string input_fixture;
  std::vector<PipelineStep> steps;
  // Irreducible label the final value is a highest weight vector of, if any.
  std::string target_label;
};

struct TraceEntry {
  std::string label;
  MultiElem value;
  std::string fixture;
  // Set when a fixture exists.
  std::optional<bool> matches;
};

struct PipelineRun {
  MultiElem result;
  std::vector<TraceEntry> trace;
  bool all_match = true;
};

MultiElem apply_step(const PipelineStep& step, const MultiElem& x);
PipelineRun run_pipeline(const Pipeline& p, const MultiElem& x);

// The abelian cycles of the [2^2 1^2] and [1^4] detections, assembled from
// BP values; need g >= 4 and g >= 5.
MultiElem cycle_2211(int genus);
MultiElem cycle_14(int genus);

// Detection composites; need g >= 4, 5 and 6.
Pipeline pipeline_2211(int genus);
Pipeline pipeline_14(int genus);
Pipeline pipeline_16(int genus);

}  // namespace chw::ch
