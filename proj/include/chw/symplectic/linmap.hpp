#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "chw/symplectic/multielem.hpp"

namespace chw::sp {

// Linear endomorphism of H given by the images of basis symbols. Symbols
// without an explicit image are fixed.
class LinMap {
 public:
  explicit LinMap(int genus);
  static LinMap identity(int genus) { return LinMap(genus); }
  static LinMap substitution(int genus, const std::vector<std::pair<Symbol, HElem>>& images);
  // x -> x + c (x . v) v
  static LinMap transvection(const HElem& v, const Rational& c = 1);

  int genus() const { return genus_; }
  HElem image(Symbol s) const;
  HElem apply(const HElem& x) const;
  void set_image(Symbol s, const HElem& x);

  // (f * g)(x) = f(g(x))
  friend LinMap operator*(const LinMap& f, const LinMap& g);

 private:
  int genus_;
  std::map<Symbol, HElem> images_;
};

bool is_symplectic(const LinMap& f);

// Functorial action of f on a multilinear space.
MultiElem induced(const LinMap& f, const MultiElem& x);

// Linear map MultiElem -> MultiElem assembled from induced maps, sums,
// differences and composition.
class Endo {
 public:
  using Fn = std::function<MultiElem(const MultiElem&)>;
  explicit Endo(Fn f) : f_(std::move(f)) {}
  static Endo identity();
  static Endo induced(const LinMap& f);

  MultiElem operator()(const MultiElem& x) const { return f_(x); }
  friend Endo operator+(const Endo& a, const Endo& b);
  friend Endo operator-(const Endo& a, const Endo& b);
  // (a * b)(x) = a(b(x))
  friend Endo operator*(const Endo& a, const Endo& b);

 private:
  Fn f_;
};

}  // namespace chw::sp
