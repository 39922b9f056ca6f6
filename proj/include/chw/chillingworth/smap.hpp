#pragma once

#include <optional>

#include "chw/symplectic/multielem.hpp"
#include "chw/treediag/combo.hpp"

namespace chw::ch {

// Degree-one correspondence Wedge^3 H -> T_1: x ^ y ^ z -> tripod(x, z, y).
tree::TreeCombo tripod_preimage(const sp::MultiElem& x);

// Bracket of the tripod preimages of the two factors of an element of
// Wedge^2 U; throws DomainError outside Wedge^2 U.
tree::TreeCombo s_map_bracket(const sp::MultiElem& x);
// q applied to s_map_bracket.
sp::MultiElem s_map(const sp::MultiElem& x);

struct XiElements {
  // Needs g >= 4.
  std::optional<sp::MultiElem> xi0;
  tree::TreeCombo xi1;
  tree::TreeCombo xi1_bracket;
  tree::TreeCombo xi2;
  tree::TreeCombo xi2_bracket;
};

// Throws UnsupportedGenus below 3 and Error if a bracket form differs from
// its explicit form.
XiElements xi_elements(int genus);

// Degree-three detection: partial_contract5 of eta in H^{(x)5}.
sp::MultiElem detection(const tree::TreeCombo& x);

}  // namespace chw::ch
