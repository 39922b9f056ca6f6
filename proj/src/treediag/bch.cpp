#include "chw/treediag/bch.hpp"

#include "chw/error.hpp"

namespace chw::tree {

namespace {
constexpr int kMaxBchDegree = 6;
}

GradedTreeElem::GradedTreeElem(int g, int max_deg) : genus(g), max_degree(max_deg) {
  sp::check_genus(g);
  if (max_deg < 1 || max_deg > kMaxBchDegree) throw DomainError("truncation bound out of range");
}

const TreeCombo& GradedTreeElem::part(int d) const {
  static const TreeCombo kZero;
  auto it = parts.find(d);
  return it == parts.end() ? kZero : it->second;
}

void GradedTreeElem::add(const TreeCombo& x, const Rational& c) {
  sp::require_same_genus(genus, x.genus());
  if (x.degree() > max_degree) return;
  auto [it, fresh] = parts.try_emplace(x.degree(), genus, x.degree());
  it->second += c * x;
  if (it->second.is_zero()) parts.erase(it);
}

GradedTreeElem& GradedTreeElem::operator+=(const GradedTreeElem& y) {
  for (const auto& [d, x] : y.parts) add(x);
  return *this;
}

GradedTreeElem& GradedTreeElem::operator*=(const Rational& c) {
  if (sgn(c) == 0) parts.clear();
  for (auto& [d, x] : parts) x *= c;
  return *this;
}

GradedTreeElem graded_bracket(const GradedTreeElem& x, const GradedTreeElem& y) {
  sp::require_same_genus(x.genus, y.genus);
  GradedTreeElem out(x.genus, std::min(x.max_degree, y.max_degree));
  for (const auto& [dx, px] : x.parts)
    for (const auto& [dy, py] : y.parts)
      if (dx + dy <= out.max_degree) out.add(tree_bracket(px, py));
  return out;
}

GradedTreeElem bch_truncated(const GradedTreeElem& x, const GradedTreeElem& y, int max_degree) {
  if (max_degree < 1 || max_degree > kMaxBchDegree) throw DomainError("truncation bound out of range");
  if (max_degree > 4) throw DomainError("BCH terms are implemented through total degree 4");
  GradedTreeElem xt(x.genus, max_degree), yt(y.genus, max_degree);
  xt += x;
  yt += y;
  GradedTreeElem xy = graded_bracket(xt, yt);
  GradedTreeElem x_xy = graded_bracket(xt, xy);
  GradedTreeElem out = xt + yt;
  out += Rational(1, 2) * xy;
  out += Rational(1, 12) * x_xy;
  out += Rational(-1, 12) * graded_bracket(yt, xy);
  out += Rational(-1, 24) * graded_bracket(yt, x_xy);
  return out;
}

GradedTreeElem bch_inverse(const GradedTreeElem& x) { return Rational(-1) * x; }

bool equal_mod_relations(const GradedTreeElem& x, const GradedTreeElem& y) {
  sp::require_same_genus(x.genus, y.genus);
  for (int d = 1; d <= std::max(x.max_degree, y.max_degree); ++d) {
    TreeCombo diff(x.genus, d);
    if (x.parts.count(d)) diff += x.part(d);
    if (y.parts.count(d)) diff -= y.part(d);
    if (!is_zero_mod_relations(diff)) return false;
  }
  return true;
}

bool conjugation_identity_check(const GradedTreeElem& f, const GradedTreeElem& h) {
  if (h.parts.count(1)) throw DomainError("h must have no degree-1 part");
  for (const auto& [d, x] : f.parts)
    if (d > 3) throw DomainError("f must be supported in degrees 1..3");
  for (const auto& [d, x] : h.parts)
    if (d > 3) throw DomainError("h must be supported in degrees 2..3");
  const int n = 3;
  GradedTreeElem lhs = bch_truncated(bch_truncated(f, h, n), bch_inverse(f), n);
  GradedTreeElem rhs(h.genus, n);
  rhs += h;
  if (f.parts.count(1) && h.parts.count(2)) rhs.add(tree_bracket(f.part(1), h.part(2)));
  return equal_mod_relations(lhs, rhs);
}

}  // namespace chw::tree
