#include "chw/freelie/lie.hpp"

#include "chw/error.hpp"

namespace chw::lie {

LieElem LieElem::generator(int g, Symbol s, const Rational& c) {
  LieElem x(g);
  if (!sp::valid_symbol(s, g)) throw GenusMismatch("generator outside genus");
  linalg::add_term(x.coeffs, Word{s}, c);
  return x;
}

LieElem& LieElem::operator+=(const LieElem& y) {
  sp::require_same_genus(genus, y.genus);
  linalg::axpy(coeffs, Rational(1), y.coeffs);
  return *this;
}

LieElem& LieElem::operator-=(const LieElem& y) {
  sp::require_same_genus(genus, y.genus);
  linalg::axpy(coeffs, Rational(-1), y.coeffs);
  return *this;
}

LieElem& LieElem::operator*=(const Rational& c) {
  coeffs = linalg::scaled(coeffs, c);
  return *this;
}

Tensor embed_tensor(const LieElem& x) {
  Tensor t;
  for (const auto& [w, c] : x.coeffs) linalg::axpy(t, c, lyndon_expansion(w));
  return t;
}

sp::MultiElem embed_tensor(const LieElem& x, int d) {
  sp::MultiElem out(x.genus, sp::space_tensor(d));
  for (const auto& [w, c] : embed_tensor(x)) {
    if (static_cast<int>(w.size()) != d) throw DomainError("Lie element not homogeneous of the requested degree");
    out.add_word(w, c);
  }
  return out;
}

LieElem from_tensor(int genus, Tensor t) {
  LieElem out(genus);
  while (!t.empty()) {
    auto lead = t.begin();
    Word w = lead->first;
    if (!is_lyndon(w)) throw DomainError("tensor is not a Lie element (leading word " + sp::to_string(w) + ")");
    Rational c = lead->second;
    linalg::add_term(out.coeffs, w, c);
    linalg::axpy(t, Rational(-c), lyndon_expansion(w));
  }
  return out;
}

LieElem lie_bracket(const LieElem& x, const LieElem& y) {
  sp::require_same_genus(x.genus, y.genus);
  return from_tensor(x.genus, tensor_commutator(embed_tensor(x), embed_tensor(y)));
}

std::string bracket_sexpr(const Word& w) {
  if (w.size() == 1) return sp::symbol_name(w[0]);
  auto [u, v] = standard_factorization(w);
  return "(bracket " + bracket_sexpr(u) + " " + bracket_sexpr(v) + ")";
}

std::string to_sexpr(const LieElem& x) {
  if (x.is_zero()) return "0";
  std::vector<std::string> parts;
  for (const auto& [w, c] : x.coeffs) {
    std::string t = bracket_sexpr(w);
    parts.push_back(c == 1 ? t : "(* " + c.get_str() + " " + t + ")");
  }
  if (parts.size() == 1) return parts[0];
  std::string s = "(+";
  for (const auto& p : parts) s += " " + p;
  return s + ")";
}

}  // namespace chw::lie
