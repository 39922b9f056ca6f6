#pragma once

#include <vector>

#include "chw/linalg/matrix.hpp"

namespace chw::linalg {

// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SNFResult {
  IntMatrix D, U, V;
  std::vector<Integer> diagonal() const;  // nonzero diagonal entries
};

SNFResult smith_normal_form(const IntMatrix& m);

// Nonzero invariant factors (ascending, each dividing the next) computed
// by sparse elimination without transforms.
std::vector<Integer> invariant_factors(const IntMatrix& m);

}  // namespace chw::linalg
