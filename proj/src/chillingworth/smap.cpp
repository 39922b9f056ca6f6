#include "chw/chillingworth/smap.hpp"

#include "chw/chillingworth/fixtures.hpp"
#include "chw/chillingworth/johnson.hpp"
#include "chw/error.hpp"
#include "chw/symplectic/equivariant.hpp"

namespace chw::ch {

using sp::HElem;

tree::TreeCombo tripod_preimage(const sp::MultiElem& x) {
  if (!(x.space() == sp::space_wedge(3))) throw SpaceMismatch("tripod preimage needs Wedge^3 H");
  const int g = x.genus();
  tree::TreeCombo out(g, 1);
  for (const auto& [w, c] : x.terms())
    out.add_tree(tree::tripod(HElem::basis(g, w[0]), HElem::basis(g, w[2]), HElem::basis(g, w[1])), c);
  return out;
}

tree::TreeCombo s_map_bracket(const sp::MultiElem& x) {
  if (!(x.space() == sp::space_wedge_of_wedge(2, 3))) throw SpaceMismatch("s-map needs Wedge^2(Wedge^3 H)");
  if (!in_wedge2_u(x)) throw DomainError("s-map argument is not in Wedge^2 U");
  const int g = x.genus();
  tree::TreeCombo out(g, 2);
  for (const auto& [w, c] : x.terms()) {
    auto left = tripod_preimage(sp::wedge_of(g, {w[0], w[1], w[2]}));
    auto right = tripod_preimage(sp::wedge_of(g, {w[3], w[4], w[5]}));
    out += c * tree::tree_bracket(left, right);
  }
  return out;
}

sp::MultiElem s_map(const sp::MultiElem& x) { return tree::q_map(s_map_bracket(x)); }

XiElements xi_elements(int g) {
  if (g < 3) throw UnsupportedGenus("xi elements need genus >= 3");
  XiElements xi;
  if (g >= 4) xi.xi0 = fixture_multi("smap.xi0", g);
  xi.xi1 = fixture_tree("xi1.trees", g);
  xi.xi1_bracket = tree::tree_bracket(fixture_tree("xi1.bracket-left", g), fixture_tree("xi1.bracket-right", g));
  xi.xi2 = fixture_tree("xi2.trees", g);
  xi.xi2_bracket = tree::tree_bracket(fixture_tree("xi2.bracket-left", g), fixture_tree("xi2.bracket-right", g));
  if (!tree::is_zero_mod_relations(xi.xi1 - xi.xi1_bracket)) throw Error("xi1 bracket form differs from its trees");
  if (!tree::is_zero_mod_relations(xi.xi2 - xi.xi2_bracket)) throw Error("xi2 bracket form differs from its trees");
  return xi;
}

sp::MultiElem detection(const tree::TreeCombo& x) {
  if (x.degree() != 3) throw DomainError("detection needs a degree-three tree combination");
  sp::MultiElem five(x.genus(), sp::space_tensor(5));
  for (const auto& [w, c] : tree::eta_tensor(x)) five.add_word(w, c);
  return sp::partial_contract5(five);
}

}  // namespace chw::ch
