#include "chw/symplectic/helem.hpp"

#include "chw/error.hpp"

namespace chw::sp {

void require_same_genus(int g1, int g2) {
  if (g1 != g2)
    throw GenusMismatch("genus mismatch: " + std::to_string(g1) + " vs " + std::to_string(g2));
}

HElem HElem::basis(int g, Symbol s, const Rational& c) {
  HElem out(g);
  if (!valid_symbol(s, g)) throw GenusMismatch(symbol_name(s) + " not available at genus " + std::to_string(g));
  linalg::add_term(out.coeffs, s, c);
  return out;
}

Rational HElem::coeff(Symbol s) const {
  auto it = coeffs.find(s);
  return it == coeffs.end() ? Rational(0) : it->second;
}

HElem& HElem::operator+=(const HElem& y) {
  require_same_genus(genus, y.genus);
  linalg::axpy(coeffs, Rational(1), y.coeffs);
  return *this;
}

HElem& HElem::operator-=(const HElem& y) {
  require_same_genus(genus, y.genus);
  linalg::axpy(coeffs, Rational(-1), y.coeffs);
  return *this;
}

HElem& HElem::operator*=(const Rational& c) {
  coeffs = linalg::scaled(coeffs, c);
  return *this;
}

Rational intersection(const HElem& x, const HElem& y) {
  require_same_genus(x.genus, y.genus);
  Rational acc = 0;
  for (const auto& [s, c] : x.coeffs) {
    Rational d = y.coeff(dual(s));
    if (sgn(d) != 0) acc += pairing(s, dual(s)) * c * d;
  }
  return acc;
}

linalg::SparseVec<Symbol> poincare_dual(const HElem& x) {
  linalg::SparseVec<Symbol> out;
  for (const auto& [s, c] : x.coeffs) linalg::add_term(out, dual(s), Rational(pairing(s, dual(s))) * c);
  return out;
}

std::string to_sexpr(const HElem& x) {
  if (x.is_zero()) return "0";
  std::string terms;
  for (const auto& [s, c] : x.coeffs) {
    std::string t = c == 1 ? symbol_name(s) : "(* " + c.get_str() + " " + symbol_name(s) + ")";
    terms += (terms.empty() ? "" : " ") + t;
  }
  return x.coeffs.size() == 1 ? terms : "(+ " + terms + ")";
}

}  // namespace chw::sp
