#pragma once

#include <string>

#include "chw/linalg/sparse.hpp"
#include "chw/symplectic/symbol.hpp"

namespace chw::sp {

using linalg::Rational;

// Element of H with exact rational coefficients.
struct HElem {
  int genus = 1;
  linalg::SparseVec<Symbol> coeffs;

  HElem() = default;
  explicit HElem(int g) : genus(g) { check_genus(g); }
  static HElem basis(int g, Symbol s, const Rational& c = 1);

  bool is_zero() const { return coeffs.empty(); }
  Rational coeff(Symbol s) const;

  HElem& operator+=(const HElem& y);
  HElem& operator-=(const HElem& y);
  HElem& operator*=(const Rational& c);
  friend HElem operator+(HElem x, const HElem& y) { return x += y; }
  friend HElem operator-(HElem x, const HElem& y) { return x -= y; }
  friend HElem operator*(const Rational& c, HElem x) { return x *= c; }
  friend HElem operator-(HElem x) { return x *= -1; }
  friend bool operator==(const HElem& x, const HElem& y) {
    return x.genus == y.genus && x.coeffs == y.coeffs;
  }
};

void require_same_genus(int g1, int g2);

Rational intersection(const HElem& x, const HElem& y);

// Poincare dual x -> (y -> x . y) as an element of H^*, recorded as the
// coefficient vector of the functional on the basis symbols.
linalg::SparseVec<Symbol> poincare_dual(const HElem& x);

std::string to_sexpr(const HElem& x);

}  // namespace chw::sp
