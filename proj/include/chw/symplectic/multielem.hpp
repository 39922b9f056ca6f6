#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chw/symplectic/helem.hpp"
#include "chw/symplectic/space.hpp"

namespace chw::sp {

// Element of a tensor product of exterior, symmetric and tensor powers of
// H. Keys are normalized basis words (factor words concatenated).
class MultiElem {
 public:
  MultiElem() = default;
  MultiElem(int genus, SpaceDescriptor space);

  int genus() const { return genus_; }
  const SpaceDescriptor& space() const { return space_; }
  const linalg::SparseVec<Word>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(Word w) const;

  // Adds c * w after normalizing w.
  void add_word(Word w, const Rational& c);

  MultiElem& operator+=(const MultiElem& y);
  MultiElem& operator-=(const MultiElem& y);
  MultiElem& operator*=(const Rational& c);
  friend MultiElem operator+(MultiElem x, const MultiElem& y) { return x += y; }
  friend MultiElem operator-(MultiElem x, const MultiElem& y) { return x -= y; }
  friend MultiElem operator*(const Rational& c, MultiElem x) { return x *= c; }
  friend MultiElem operator-(MultiElem x) { return x *= -1; }
  friend bool operator==(const MultiElem& x, const MultiElem& y);

 private:
  void require_compatible(const MultiElem& y) const;
  int genus_ = 1;
  SpaceDescriptor space_;
  linalg::SparseVec<Word> terms_;
};

// Basis element of a space from a flat symbol list.
MultiElem basis_elem(int genus, const SpaceDescriptor& space, std::initializer_list<Symbol> syms,
                     const Rational& c = 1);
MultiElem wedge_of(int genus, std::initializer_list<Symbol> syms, const Rational& c = 1);

MultiElem tensor(const MultiElem& x, const MultiElem& y);

// Exterior product of elements of the same space V = Wedge^m H, as an
// element of Wedge^k V.
MultiElem outer_wedge(const std::vector<MultiElem>& xs);

// Multilinear expansion of a word whose letters are replaced by elements of
// H, emitted into `out` (normalized in out's space).
void expand_letters(const std::vector<const HElem*>& letters, const Rational& c, MultiElem& out);

std::string to_sexpr(const MultiElem& x);

}  // namespace chw::sp
