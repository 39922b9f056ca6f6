#pragma once

#include <string>
#include <vector>

#include "chw/freelie/homl.hpp"
#include "chw/symplectic/multielem.hpp"
#include "chw/treediag/tree.hpp"

namespace chw::tree {

// Rational combination of basis trees of one degree, keyed by canonical
// encoding.
class TreeCombo {
 public:
  TreeCombo() = default;
  TreeCombo(int genus, int degree);

  int genus() const { return genus_; }
  int degree() const { return degree_; }
  const linalg::SparseVec<Word>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * t after multilinear expansion of the labels.
  void add_tree(const TreeDiagram& t, const Rational& c = 1);
  void add_key(const Word& key, const Rational& c);

  TreeCombo& operator+=(const TreeCombo& y);
  TreeCombo& operator-=(const TreeCombo& y);
  TreeCombo& operator*=(const Rational& c);
  friend TreeCombo operator+(TreeCombo x, const TreeCombo& y) { return x += y; }
  friend TreeCombo operator-(TreeCombo x, const TreeCombo& y) { return x -= y; }
  friend TreeCombo operator*(const Rational& c, TreeCombo x) { return x *= c; }
  friend bool operator==(const TreeCombo& x, const TreeCombo& y) {
    return x.genus_ == y.genus_ && x.degree_ == y.degree_ && x.terms_ == y.terms_;
  }

 private:
  void require_compatible(const TreeCombo& y) const;
  int genus_ = 1, degree_ = 1;
  linalg::SparseVec<Word> terms_;
};

TreeCombo expand_multilinear(const TreeDiagram& t);

// Bracketing of the tree read from `root_leaf`, in Lyndon coordinates.
lie::LieElem brack(const TreeDiagram& t, int root_leaf);
lie::Tensor brack_tensor(const Planar& p);

// [P, Q]_T = sum over leaf pairs (v in P, w in Q) of (v . w) glue(P, v, Q, w).
TreeCombo tree_bracket(const TreeCombo& p, const TreeCombo& q);

// eta(T) = sum over leaves v of label(v) (x) brack(T rooted at v), in the
// tensor coordinates of H^{(x)(d+2)} and in H (x) L coordinates.
lie::Tensor eta_tensor(const TreeDiagram& t);
lie::Tensor eta_tensor(const TreeCombo& x);
lie::HomLElem eta(const TreeCombo& x);
bool is_zero_mod_relations(const TreeCombo& x);

// q: T_2 -> Wedge^2 H.
sp::MultiElem q_map(const TreeCombo& x);

enum class Tr3Variant { Paper, TraceOracle };
// Tr_3: T_3 -> S^3 H. Paper applies the printed formula term by term; the
// oracle contracts the H-tag of eta(x) with the first slot of the Lie part
// and symmetrizes the remaining three slots.
sp::MultiElem tr3(const TreeCombo& x, Tr3Variant variant = Tr3Variant::TraceOracle);

std::string to_sexpr(const TreeCombo& x);

}  // namespace chw::tree
