#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "chw/linalg/rational.hpp"

namespace chw::linalg {

template <class K>
using SparseVec = std::map<K, Rational>;

template <class K>
void add_term(SparseVec<K>& v, const K& k, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = v.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) v.erase(it);
  }
}

// y += c * x
template <class K>
void axpy(SparseVec<K>& y, const Rational& c, const SparseVec<K>& x) {
  if (sgn(c) == 0) return;
  for (const auto& [k, v] : x) add_term(y, k, c * v);
}

template <class K>
SparseVec<K> scaled(const SparseVec<K>& x, const Rational& c) {
  SparseVec<K> out;
  if (sgn(c) == 0) return out;
  for (const auto& [k, v] : x) out.emplace(k, v * c);
  return out;
}

// Row echelon form built incrementally. Each stored row has leading
// coefficient 1 at its key.
template <class K>
class Echelon {
 public:
  // Reduces v in place against the stored rows; true iff v became zero.
  bool reduce(SparseVec<K>& v) const {
    while (!v.empty()) {
      auto lead = v.begin();
      auto p = rows_.find(lead->first);
      if (p == rows_.end()) return false;
      Rational c = -lead->second;
      axpy(v, c, p->second);
    }
    return true;
  }

  // Returns true iff v was independent of the stored rows.
  bool insert(SparseVec<K> v) {
    if (reduce(v)) return false;
    Rational inv = 1 / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    K key = v.begin()->first;
    rows_.emplace(std::move(key), std::move(v));
    return true;
  }

  bool contains(SparseVec<K> v) const { return reduce(v); }
  std::size_t rank() const { return rows_.size(); }
  const std::map<K, SparseVec<K>>& rows() const { return rows_; }

 private:
  std::map<K, SparseVec<K>> rows_;
};

// Echelon form that remembers, for every stored row, which combination of
// the inserted vectors produced it. Dependent insertions yield relations.
template <class K>
class TrackedEchelon {
 public:
  using Combo = SparseVec<std::size_t>;

  // Inserts v as input number `id`. Returns the relation among inputs when
  // v is dependent, an empty optional-like pair otherwise.
  std::pair<bool, Combo> insert(SparseVec<K> v, std::size_t id) {
    Combo comb;
    comb.emplace(id, Rational(1));
    while (!v.empty()) {
      auto lead = v.begin();
      auto p = rows_.find(lead->first);
      if (p == rows_.end()) break;
      Rational c = -lead->second;
      axpy(v, c, p->second.first);
      axpy(comb, c, p->second.second);
    }
    if (v.empty()) return {false, std::move(comb)};
    Rational inv = 1 / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    for (auto& [k, c] : comb) c *= inv;
    K key = v.begin()->first;
    rows_.emplace(std::move(key), std::make_pair(std::move(v), std::move(comb)));
    return {true, {}};
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<K, std::pair<SparseVec<K>, Combo>> rows_;
};

}  // namespace chw::linalg
