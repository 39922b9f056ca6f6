#include "chw/symplectic/linmap.hpp"

#include "chw/error.hpp"

namespace chw::sp {

LinMap::LinMap(int genus) : genus_(genus) { check_genus(genus); }

LinMap LinMap::substitution(int genus, const std::vector<std::pair<Symbol, HElem>>& images) {
  LinMap f(genus);
  for (const auto& [s, x] : images) f.set_image(s, x);
  return f;
}

LinMap LinMap::transvection(const HElem& v, const Rational& c) {
  LinMap f(v.genus);
  for (Symbol s : alphabet(v.genus)) {
    Rational t = c * intersection(HElem::basis(v.genus, s), v);
    if (sgn(t) != 0) f.set_image(s, HElem::basis(v.genus, s) + t * v);
  }
  return f;
}

void LinMap::set_image(Symbol s, const HElem& x) {
  if (!valid_symbol(s, genus_)) throw GenusMismatch(symbol_name(s) + " not available at genus " + std::to_string(genus_));
  require_same_genus(genus_, x.genus);
  images_[s] = x;
}

HElem LinMap::image(Symbol s) const {
  auto it = images_.find(s);
  return it == images_.end() ? HElem::basis(genus_, s) : it->second;
}

HElem LinMap::apply(const HElem& x) const {
  require_same_genus(genus_, x.genus);
  HElem out(genus_);
  for (const auto& [s, c] : x.coeffs) out += c * image(s);
  return out;
}

LinMap operator*(const LinMap& f, const LinMap& g) {
  require_same_genus(f.genus_, g.genus_);
  LinMap h(f.genus_);
  for (Symbol s : alphabet(f.genus_)) h.set_image(s, f.apply(g.image(s)));
  return h;
}

bool is_symplectic(const LinMap& f) {
  auto syms = alphabet(f.genus());
  for (Symbol x : syms)
    for (Symbol y : syms)
      if (intersection(f.image(x), f.image(y)) != pairing(x, y)) return false;
  return true;
}

MultiElem induced(const LinMap& f, const MultiElem& x) {
  require_same_genus(f.genus(), x.genus());
  std::map<Symbol, HElem> cache;
  MultiElem out(x.genus(), x.space());
  for (const auto& [w, c] : x.terms()) {
    std::vector<const HElem*> letters;
    for (Symbol s : w) {
      auto it = cache.find(s);
      if (it == cache.end()) it = cache.emplace(s, f.image(s)).first;
      letters.push_back(&it->second);
    }
    expand_letters(letters, c, out);
  }
  return out;
}

Endo Endo::identity() {
  return Endo([](const MultiElem& x) { return x; });
}

Endo Endo::induced(const LinMap& f) {
  return Endo([f](const MultiElem& x) { return sp::induced(f, x); });
}

Endo operator+(const Endo& a, const Endo& b) {
  return Endo([a, b](const MultiElem& x) { return a(x) + b(x); });
}

Endo operator-(const Endo& a, const Endo& b) {
  return Endo([a, b](const MultiElem& x) { return a(x) - b(x); });
}

Endo operator*(const Endo& a, const Endo& b) {
  return Endo([a, b](const MultiElem& x) { return a(b(x)); });
}

}  // namespace chw::sp
