#include "chw/linalg/matrix.hpp"

#include <string>

#include "chw/error.hpp"

namespace chw::linalg {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::size_t ncols = rows.size() ? rows.begin()->size() : 0;
  RatMatrix m(rows.size(), ncols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw DimensionMismatch("ragged matrix rows");
    std::size_t c = 0;
    for (const auto& v : row) m.set(r, c++, v);
    ++r;
  }
  return m;
}

void RatMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_)
    throw DimensionMismatch("index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside " + std::to_string(rows_.size()) + "x" +
                            std::to_string(cols_));
}

Rational RatMatrix::get(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Rational(0) : it->second;
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  check(r, c);
  if (sgn(v) == 0)
    rows_[r].erase(c);
  else
    rows_[r][c] = v;
}

void RatMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  check(r, c);
  add_term(rows_[r], c, v);
}

RatVec RatMatrix::apply(const RatVec& x) const {
  RatVec y;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational acc = 0;
    for (const auto& [c, v] : rows_[r]) {
      auto it = x.find(c);
      if (it != x.end()) acc += v * it->second;
    }
    if (sgn(acc) != 0) y.emplace(r, acc);
  }
  for (const auto& [c, v] : x)
    if (c >= cols_) throw DimensionMismatch("vector index outside matrix columns");
  return y;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t ncols = rows.size() ? rows.begin()->size() : 0;
  IntMatrix m(rows.size(), ncols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw DimensionMismatch("ragged matrix rows");
    std::size_t c = 0;
    for (long v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Integer& IntMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  return data_[r * cols_ + c];
}

const Integer& IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  return data_[r * cols_ + c];
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a.data_[i * a.cols_ + k];
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.data_[i * b.cols_ + j] += x * b.data_[k * b.cols_ + j];
    }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m.at(r, c)) != 0) out.set(r, c, Rational(m.at(r, c)));
  return out;
}

std::size_t rank(const RatMatrix& m) {
  Echelon<std::size_t> e;
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
  std::vector<RatVec> columns(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) columns[c].emplace(r, v);
  TrackedEchelon<std::size_t> e;
  std::vector<RatVec> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto [independent, relation] = e.insert(std::move(columns[c]), c);
    if (!independent) out.push_back(std::move(relation));
  }
  return out;
}

}  // namespace chw::linalg
