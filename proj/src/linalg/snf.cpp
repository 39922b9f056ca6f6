#include "chw/linalg/snf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace chw::linalg {

namespace {

// Coefficients s, t with s*a + t*b = g = gcd(a, b) > 0.
void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

void row_combine(IntMatrix& m, std::size_t i, std::size_t k, const Integer& s, const Integer& t,
                 const Integer& u, const Integer& v) {
  // (row i, row k) <- (s*row i + t*row k, u*row i + v*row k)
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer x = m.at(i, c), y = m.at(k, c);
    m.at(i, c) = s * x + t * y;
    m.at(k, c) = u * x + v * y;
  }
}

void col_combine(IntMatrix& m, std::size_t j, std::size_t k, const Integer& s, const Integer& t,
                 const Integer& u, const Integer& v) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer x = m.at(r, j), y = m.at(r, k);
    m.at(r, j) = s * x + t * y;
    m.at(r, k) = u * x + v * y;
  }
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(k, c));
}

void swap_cols(IntMatrix& m, std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, j), m.at(r, k));
}

// Clears entry (i, t) of column t using row t as pivot row.
void clear_below(SNFResult& s, std::size_t t, std::size_t i) {
  IntMatrix& a = s.D;
  const Integer p = a.at(t, t), b = a.at(i, t);
  if (sgn(b) == 0) return;
  if (mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t())) {
    Integer q = b / p;
    row_combine(a, t, i, 1, 0, -q, 1);
    row_combine(s.U, t, i, 1, 0, -q, 1);
    return;
  }
  Integer g, x, y;
  xgcd(p, b, g, x, y);
  Integer u = -b / g, v = p / g;
  row_combine(a, t, i, x, y, u, v);
  row_combine(s.U, t, i, x, y, u, v);
}

void clear_right(SNFResult& s, std::size_t t, std::size_t j) {
  IntMatrix& a = s.D;
  const Integer p = a.at(t, t), b = a.at(t, j);
  if (sgn(b) == 0) return;
  if (mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t())) {
    Integer q = b / p;
    col_combine(a, t, j, 1, 0, -q, 1);
    col_combine(s.V, t, j, 1, 0, -q, 1);
    return;
  }
  Integer g, x, y;
  xgcd(p, b, g, x, y);
  Integer u = -b / g, v = p / g;
  col_combine(a, t, j, x, y, u, v);
  col_combine(s.V, t, j, x, y, u, v);
}

}  // namespace

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (sgn(D.at(i, i)) != 0) out.push_back(D.at(i, i));
  return out;
}

SNFResult smith_normal_form(const IntMatrix& m) {
  SNFResult s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& a = s.D;
  const std::size_t nr = m.rows(), nc = m.cols();
  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t bi = nr, bj = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (sgn(a.at(i, j)) != 0 &&
            (bi == nr || mpz_cmpabs(a.at(i, j).get_mpz_t(), a.at(bi, bj).get_mpz_t()) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == nr) break;
    swap_rows(a, t, bi);
    swap_rows(s.U, t, bi);
    swap_cols(a, t, bj);
    swap_cols(s.V, t, bj);
    for (;;) {
      for (std::size_t i = t + 1; i < nr; ++i) clear_below(s, t, i);
      for (std::size_t j = t + 1; j < nc; ++j) clear_right(s, t, j);
      bool column_clean = true;
      for (std::size_t i = t + 1; i < nr; ++i)
        if (sgn(a.at(i, t)) != 0) column_clean = false;
      if (!column_clean) continue;
      std::size_t bad = nr;
      for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == nr) break;
      row_combine(a, t, bad, 1, 1, 0, 1);
      row_combine(s.U, t, bad, 1, 1, 0, 1);
    }
    if (sgn(a.at(t, t)) < 0) {
      row_combine(a, t, t, -1, 0, -1, 0);
      row_combine(s.U, t, t, -1, 0, -1, 0);
    }
  }
  return s;
}

namespace {

class SparseIntElim {
 public:
  explicit SparseIntElim(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (sgn(m.at(r, c)) != 0) set(r, c, m.at(r, c));
  }

  std::vector<Integer> run() {
    std::vector<Integer> pivots;
    for (;;) {
      std::size_t pr = 0, pc = 0;
      if (!choose_pivot(pr, pc)) break;
      reduce(pr, pc);
      pivots.push_back(abs(rows_[pr].at(pc)));
      remove_row(pr);
    }
    return pivots;
  }

 private:
  void set(std::size_t r, std::size_t c, const Integer& v) {
    if (sgn(v) == 0) {
      rows_[r].erase(c);
      cols_[c].erase(r);
    } else {
      rows_[r][c] = v;
      cols_[c].insert(r);
    }
  }

  Integer get(std::size_t r, std::size_t c) const {
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? Integer(0) : it->second;
  }

  bool choose_pivot(std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Integer best;
    std::size_t best_cost = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) {
        std::size_t cost = (rows_[r].size() - 1) * (cols_[c].size() - 1);
        int cmp = found ? mpz_cmpabs((v).get_mpz_t(), (best).get_mpz_t()) : -1;
        if (cmp < 0 || (cmp == 0 && cost < best_cost)) {
          found = true;
          best = abs(v);
          best_cost = cost;
          pr = r;
          pc = c;
        }
      }
    return found;
  }

  // (row i, row k) <- (s*row i + t*row k, u*row i + v*row k)
  void rows_op(std::size_t i, std::size_t k, const Integer& s, const Integer& t, const Integer& u,
               const Integer& v) {
    std::set<std::size_t> support;
    for (const auto& [c, x] : rows_[i]) support.insert(c);
    for (const auto& [c, x] : rows_[k]) support.insert(c);
    for (std::size_t c : support) {
      Integer x = get(i, c), y = get(k, c);
      set(i, c, s * x + t * y);
      set(k, c, u * x + v * y);
    }
  }

  void cols_op(std::size_t j, std::size_t k, const Integer& s, const Integer& t, const Integer& u,
               const Integer& v) {
    std::set<std::size_t> support(cols_[j]);
    support.insert(cols_[k].begin(), cols_[k].end());
    for (std::size_t r : support) {
      Integer x = get(r, j), y = get(r, k);
      set(r, j, s * x + t * y);
      set(r, k, u * x + v * y);
    }
  }

  void reduce(std::size_t pr, std::size_t pc) {
    for (;;) {
      std::vector<std::size_t> others;
      for (std::size_t r : cols_[pc])
        if (r != pr) others.push_back(r);
      for (std::size_t r : others) {
        Integer p = get(pr, pc), b = get(r, pc);
        if (mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t())) {
          rows_op(pr, r, 1, 0, -(b / p), 1);
        } else {
          Integer g, x, y;
          xgcd(p, b, g, x, y);
          rows_op(pr, r, x, y, -b / g, p / g);
        }
      }
      bool dirty = false;
      std::vector<std::size_t> right;
      for (const auto& [c, v] : rows_[pr])
        if (c != pc) right.push_back(c);
      for (std::size_t c : right) {
        Integer p = get(pr, pc), b = get(pr, c);
        if (mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t())) {
          set(pr, c, 0);
        } else {
          Integer g, x, y;
          xgcd(p, b, g, x, y);
          cols_op(pc, c, x, y, -b / g, p / g);
          dirty = true;
          break;
        }
      }
      if (!dirty && cols_[pc].size() == 1) return;
    }
  }

  void remove_row(std::size_t r) {
    std::vector<std::size_t> cs;
    for (const auto& [c, v] : rows_[r]) cs.push_back(c);
    for (std::size_t c : cs) set(r, c, 0);
  }

  std::vector<std::map<std::size_t, Integer>> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

}  // namespace

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  std::vector<Integer> diag = SparseIntElim(m).run();
  std::vector<Integer> units, rest;
  for (auto& d : diag) (d == 1 ? units : rest).push_back(d);
  // diag(a, b) ~ diag(gcd, lcm)
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      Integer g = gcd(rest[i], rest[j]);
      Integer l = rest[i] / g * rest[j];
      rest[i] = g;
      rest[j] = l;
    }
  std::vector<Integer> out;
  for (auto& d : rest)
    if (d == 1)
      units.push_back(d);
    else
      out.push_back(d);
  std::sort(out.begin(), out.end());
  units.insert(units.end(), out.begin(), out.end());
  return units;
}

}  // namespace chw::linalg
