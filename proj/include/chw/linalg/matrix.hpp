#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "chw/linalg/rational.hpp"
#include "chw/linalg/sparse.hpp"

namespace chw::linalg {

using RatVec = SparseVec<std::size_t>;

// Sparse rational matrix stored by rows.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Rational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  const RatVec& row(std::size_t r) const { return rows_.at(r); }

  RatVec apply(const RatVec& x) const;

 private:
  void check(std::size_t r, std::size_t c) const;
  std::size_t cols_;
  std::vector<RatVec> rows_;
};

// Dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c);
  const Integer& at(std::size_t r, std::size_t c) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

RatMatrix to_rational(const IntMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

// Basis of {x : m x = 0}. Vector k has coefficient 1 at its largest index.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

}  // namespace chw::linalg
