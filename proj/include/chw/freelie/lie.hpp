#pragma once

#include <string>
#include <vector>

#include "chw/freelie/lyndon.hpp"
#include "chw/symplectic/multielem.hpp"

namespace chw::lie {

// Element of the free Lie algebra on H in Lyndon-basis coordinates.
struct LieElem {
  int genus = 1;
  linalg::SparseVec<Word> coeffs;

  LieElem() = default;
  explicit LieElem(int g) : genus(g) { sp::check_genus(g); }
  static LieElem generator(int g, Symbol s, const Rational& c = 1);

  bool is_zero() const { return coeffs.empty(); }
  LieElem& operator+=(const LieElem& y);
  LieElem& operator-=(const LieElem& y);
  LieElem& operator*=(const Rational& c);
  friend LieElem operator+(LieElem x, const LieElem& y) { return x += y; }
  friend LieElem operator-(LieElem x, const LieElem& y) { return x -= y; }
  friend LieElem operator*(const Rational& c, LieElem x) { return x *= c; }
  friend bool operator==(const LieElem& x, const LieElem& y) {
    return x.genus == y.genus && x.coeffs == y.coeffs;
  }
};

Tensor embed_tensor(const LieElem& x);
// Tensor as MultiElem over H^{(x)d}; x must be homogeneous of degree d.
sp::MultiElem embed_tensor(const LieElem& x, int d);

// Lyndon coordinates of a Lie element given in tensor coordinates; throws
// DomainError if t is not in the free Lie algebra.
LieElem from_tensor(int genus, Tensor t);

LieElem lie_bracket(const LieElem& x, const LieElem& y);

// Lyndon word printed with its standard bracketing, e.g. (bracket a1 (bracket a1 b1)).
std::string bracket_sexpr(const Word& w);
std::string to_sexpr(const LieElem& x);

}  // namespace chw::lie
