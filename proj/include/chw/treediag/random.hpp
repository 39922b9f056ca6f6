#pragma once

#include <random>

#include "chw/treediag/bch.hpp"

namespace chw::tree {

// Sum of two basis symbols with small integer coefficients.
HElem random_label(int genus, std::mt19937& rng);
Planar random_planar(int genus, int leaves, std::mt19937& rng);
// Sum of `trees` random trees of degree d.
TreeCombo random_combo(int genus, int degree, std::mt19937& rng, int trees = 2);
// Random components in degrees from..max_degree.
GradedTreeElem random_graded(int genus, int from, int max_degree, std::mt19937& rng);

}  // namespace chw::tree
