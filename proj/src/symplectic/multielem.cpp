#include "chw/symplectic/multielem.hpp"

#include "chw/error.hpp"

namespace chw::sp {

MultiElem::MultiElem(int genus, SpaceDescriptor space) : genus_(genus), space_(std::move(space)) {
  check_genus(genus);
}

Rational MultiElem::coeff(Word w) const {
  int s = normalize(space_, w);
  if (s == 0) return 0;
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : s * it->second;
}

void MultiElem::add_word(Word w, const Rational& c) {
  for (Symbol x : w)
    if (!valid_symbol(x, genus_))
      throw GenusMismatch(symbol_name(x) + " not available at genus " + std::to_string(genus_));
  int s = normalize(space_, w);
  if (s == 0) return;
  linalg::add_term(terms_, w, s > 0 ? c : Rational(-c));
}

void MultiElem::require_compatible(const MultiElem& y) const {
  require_same_genus(genus_, y.genus_);
  if (!(space_ == y.space_))
    throw SpaceMismatch("space mismatch: " + space_.to_string() + " vs " + y.space_.to_string());
}

MultiElem& MultiElem::operator+=(const MultiElem& y) {
  require_compatible(y);
  linalg::axpy(terms_, Rational(1), y.terms_);
  return *this;
}

MultiElem& MultiElem::operator-=(const MultiElem& y) {
  require_compatible(y);
  linalg::axpy(terms_, Rational(-1), y.terms_);
  return *this;
}

MultiElem& MultiElem::operator*=(const Rational& c) {
  terms_ = linalg::scaled(terms_, c);
  return *this;
}

bool operator==(const MultiElem& x, const MultiElem& y) {
  return x.genus_ == y.genus_ && x.space_ == y.space_ && x.terms_ == y.terms_;
}

MultiElem basis_elem(int genus, const SpaceDescriptor& space, std::initializer_list<Symbol> syms,
                     const Rational& c) {
  MultiElem out(genus, space);
  out.add_word(Word(syms), c);
  return out;
}

MultiElem wedge_of(int genus, std::initializer_list<Symbol> syms, const Rational& c) {
  return basis_elem(genus, space_wedge(static_cast<int>(syms.size())), syms, c);
}

MultiElem tensor(const MultiElem& x, const MultiElem& y) {
  require_same_genus(x.genus(), y.genus());
  MultiElem out(x.genus(), tensor_product(x.space(), y.space()));
  for (const auto& [u, c] : x.terms())
    for (const auto& [v, d] : y.terms()) out.add_word(concat(u, v), c * d);
  return out;
}

MultiElem outer_wedge(const std::vector<MultiElem>& xs) {
  if (xs.empty()) throw SpaceMismatch("empty exterior product");
  const auto& sp0 = xs.front().space();
  if (sp0.factors.size() != 1 || sp0.factors[0].kind != FactorKind::Wedge || sp0.factors[0].inner != 1)
    throw SpaceMismatch("outer wedge needs elements of Wedge^m H");
  for (const auto& x : xs) {
    require_same_genus(x.genus(), xs.front().genus());
    if (!(x.space() == sp0)) throw SpaceMismatch("outer wedge of different spaces");
  }
  int m = sp0.factors[0].arity;
  MultiElem out(xs.front().genus(), space_wedge_of_wedge(static_cast<int>(xs.size()), m));
  std::function<void(std::size_t, Word, Rational)> rec = [&](std::size_t i, Word w, Rational c) {
    if (i == xs.size()) {
      out.add_word(w, c);
      return;
    }
    for (const auto& [u, d] : xs[i].terms()) rec(i + 1, concat(w, u), c * d);
  };
  rec(0, Word{}, Rational(1));
  return out;
}

void expand_letters(const std::vector<const HElem*>& letters, const Rational& c, MultiElem& out) {
  std::function<void(std::size_t, Word&, const Rational&)> rec = [&](std::size_t i, Word& w,
                                                                      const Rational& acc) {
    if (i == letters.size()) {
      out.add_word(w, acc);
      return;
    }
    for (const auto& [s, d] : letters[i]->coeffs) {
      w.push_back(s);
      rec(i + 1, w, acc * d);
      --w.n;
    }
  };
  Word w;
  rec(0, w, c);
}

namespace {

std::string factor_sexpr(const Factor& f, const Word& w, std::size_t off) {
  auto syms = [&](std::size_t from, std::size_t len) {
    std::string s;
    for (std::size_t i = from; i < from + len; ++i) s += " " + symbol_name(w[i]);
    return s;
  };
  switch (f.kind) {
    case FactorKind::Tensor: return symbol_name(w[off]);
    case FactorKind::Sym: return "(sym" + syms(off, f.arity) + ")";
    case FactorKind::Wedge:
      if (f.inner == 1) return "(wedge" + syms(off, f.arity) + ")";
      std::string s = "(wedge";
      for (int b = 0; b < f.arity; ++b) s += " (wedge" + syms(off + b * f.inner, f.inner) + ")";
      return s + ")";
  }
  return "";
}

std::string term_sexpr(const SpaceDescriptor& space, const Word& w) {
  if (space.factors.size() == 1) return factor_sexpr(space.factors[0], w, 0);
  std::string s = "(tensor";
  std::size_t off = 0;
  for (const auto& f : space.factors) {
    s += " " + factor_sexpr(f, w, off);
    off += f.width();
  }
  return s + ")";
}

}  // namespace

std::string to_sexpr(const MultiElem& x) {
  if (x.is_zero()) return "0";
  bool scalar = x.space().width() == 0;
  std::vector<std::string> parts;
  for (const auto& [w, c] : x.terms()) {
    if (scalar) {
      parts.push_back(c.get_str());
      continue;
    }
    std::string t = term_sexpr(x.space(), w);
    parts.push_back(c == 1 ? t : "(* " + c.get_str() + " " + t + ")");
  }
  if (parts.size() == 1) return parts[0];
  std::string s = "(+";
  for (const auto& p : parts) s += " " + p;
  return s + ")";
}

}  // namespace chw::sp
