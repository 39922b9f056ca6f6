#pragma once

#include <map>

#include "chw/treediag/combo.hpp"

namespace chw::tree {

// Element of the degree completion of T(H_Q), truncated above max_degree.
struct GradedTreeElem {
  int genus = 1;
  int max_degree = 3;
  std::map<int, TreeCombo> parts;

  GradedTreeElem() = default;
  GradedTreeElem(int g, int max_deg);

  const TreeCombo& part(int d) const;
  void add(const TreeCombo& x, const Rational& c = 1);
  GradedTreeElem& operator+=(const GradedTreeElem& y);
  GradedTreeElem& operator*=(const Rational& c);
  friend GradedTreeElem operator+(GradedTreeElem x, const GradedTreeElem& y) { return x += y; }
  friend GradedTreeElem operator*(const Rational& c, GradedTreeElem x) { return x *= c; }
};

// Degree-truncated tree bracket.
GradedTreeElem graded_bracket(const GradedTreeElem& x, const GradedTreeElem& y);

// x * y = x + y + 1/2[x,y] + 1/12([x,[x,y]] - [y,[x,y]]) - 1/24[y,[x,[x,y]]],
// dropping every component of degree above max_degree.
GradedTreeElem bch_truncated(const GradedTreeElem& x, const GradedTreeElem& y, int max_degree);
GradedTreeElem bch_inverse(const GradedTreeElem& x);

// Equality modulo relations, degree by degree in eta coordinates.
bool equal_mod_relations(const GradedTreeElem& x, const GradedTreeElem& y);

// f * h * f^{-1} == h + [f_1, h_2] modulo degree 4.
bool conjugation_identity_check(const GradedTreeElem& f, const GradedTreeElem& h);

}  // namespace chw::tree
