#include "chw/treediag/random.hpp"

namespace chw::tree {

HElem random_label(int g, std::mt19937& rng) {
  auto alpha = sp::alphabet(g);
  std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  HElem x(g);
  int c = coef(rng);
  x += HElem::basis(g, alpha[pick(rng)], c == 0 ? 1 : c);
  x += HElem::basis(g, alpha[pick(rng)], coef(rng));
  return x;
}

Planar random_planar(int g, int leaves, std::mt19937& rng) {
  if (leaves == 1) return Planar::of(random_label(g, rng));
  std::uniform_int_distribution<int> split(1, leaves - 1);
  int k = split(rng);
  return Planar::node(random_planar(g, k, rng), random_planar(g, leaves - k, rng));
}

TreeCombo random_combo(int g, int d, std::mt19937& rng, int trees) {
  TreeCombo x(g, d);
  for (int k = 0; k < trees; ++k) x.add_tree(from_rooted(random_label(g, rng), random_planar(g, d + 1, rng)));
  return x;
}

GradedTreeElem random_graded(int g, int from, int max_degree, std::mt19937& rng) {
  GradedTreeElem x(g, max_degree);
  for (int d = from; d <= max_degree; ++d) x.add(random_combo(g, d, rng));
  return x;
}

}  // namespace chw::tree
