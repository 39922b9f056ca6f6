#include "chw/chillingworth/johnson.hpp"

#include <algorithm>

#include "chw/error.hpp"
#include "chw/linalg/snf.hpp"
#include "chw/symplectic/equivariant.hpp"

namespace chw::ch {

using sp::sym_a;
using sp::sym_b;
using sp::Symbol;

namespace {

void require_u_genus(int g) {
  sp::check_genus(g);
  if (g < 3) throw UnsupportedGenus("U-based computations need g >= 3");
}

MultiElem w3(int g, Symbol x, Symbol y, Symbol z) { return sp::wedge_of(g, {x, y, z}); }

}  // namespace

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

MultiElem tau1_bp(const BPSpec& bp) {
  const int g = bp.curve_class.genus;
  MultiElem out(g, sp::space_wedge(3));
  for (std::size_t i = 0; i < bp.span.size(); ++i)
    for (std::size_t j = i + 1; j < bp.span.size(); ++j)
      if (bp.span[i] == bp.span[j]) throw DomainError("BP span indices must be distinct");
  for (int i : bp.span) {
    if (i < 1 || i > g) throw GenusMismatch("span index out of range");
    HElem a = HElem::basis(g, sym_a(i)), b = HElem::basis(g, sym_b(i));
    sp::expand_letters({&a, &b, &bp.curve_class}, Rational(bp.multiplicity), out);
  }
  return out;
}

HElem chillingworth_class(const MultiElem& t) {
  MultiElem c = sp::contraction(t);
  HElem out(t.genus());
  for (const auto& [w, x] : c.terms()) out += HElem::basis(t.genus(), w[0], 2 * x);
  return out;
}

bool in_Ch(const MultiElem& t) { return sp::contraction(t).is_zero(); }

std::vector<MultiElem> u_basis(int g) {
  require_u_genus(g);
  std::vector<MultiElem> out;
  // (i)
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j)
      for (int k = j + 1; k <= g; ++k) out.push_back(w3(g, sym_a(i), sym_a(j), sym_a(k)));
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j)
      for (int k = j + 1; k <= g; ++k) out.push_back(w3(g, sym_b(i), sym_b(j), sym_b(k)));
  // (ii)
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j)
      for (int k = 1; k <= g; ++k)
        if (k != i && k != j) out.push_back(w3(g, sym_a(i), sym_a(j), sym_b(k)));
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j)
      for (int k = j + 1; k <= g; ++k)
        if (i != j && i != k) out.push_back(w3(g, sym_a(i), sym_b(j), sym_b(k)));
  // (iii)
  for (auto x : {sym_a(1), sym_b(1)})
    for (int i = 3; i <= g; ++i)
      out.push_back(w3(g, x, sym_a(2), sym_b(2)) - w3(g, x, sym_a(i), sym_b(i)));
  for (int j = 2; j <= g; ++j)
    for (auto x : {sym_a(j), sym_b(j)})
      for (int i = 2; i <= g; ++i)
        if (i != j) out.push_back(w3(g, x, sym_a(1), sym_b(1)) - w3(g, x, sym_a(i), sym_b(i)));
  return out;
}

std::vector<MultiElem> complement_basis(int g) {
  require_u_genus(g);
  std::vector<MultiElem> out;
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j)
      if (i != j) {
        out.push_back(w3(g, sym_a(i), sym_a(j), sym_b(j)));
        out.push_back(w3(g, sym_b(i), sym_a(j), sym_b(j)));
      }
  return out;
}

std::vector<Integer> torelli_mod_ch(int g) {
  require_u_genus(g);
  // standard word basis of Wedge^3 H
  auto alpha = sp::alphabet(g);
  std::map<sp::Word, std::size_t> row;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      for (std::size_t k = j + 1; k < alpha.size(); ++k) {
        std::size_t n = row.size();
        row.emplace(sp::Word{alpha[i], alpha[j], alpha[k]}, n);
      }
  std::vector<MultiElem> cols;
  for (Symbol x : alpha) {
    MultiElem v(g, sp::space_wedge(3));
    HElem hx = HElem::basis(g, x);
    for (int i = 1; i <= g; ++i) {
      HElem a = HElem::basis(g, sym_a(i)), b = HElem::basis(g, sym_b(i));
      sp::expand_letters({&a, &b, &hx}, 1, v);
    }
    cols.push_back(v);
  }
  for (auto& u : u_basis(g)) cols.push_back(std::move(u));
  if (cols.size() != row.size()) throw DimensionMismatch("v is not square");
  linalg::IntMatrix m(row.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [w, x] : cols[c].terms()) m.at(row.at(w), c) = x.get_num();
  std::vector<Integer> out;
  for (const auto& d : linalg::invariant_factors(m))
    if (abs(d) != 1) out.push_back(d);
  return out;
}

MultiElem abelian_cycle(const MultiElem& t1, const MultiElem& t2) { return sp::outer_wedge({t1, t2}); }

bool in_wedge2_u(const MultiElem& x) {
  if (!(x.space() == sp::space_wedge_of_wedge(2, 3))) throw SpaceMismatch("expected Wedge^2(Wedge^3 H)");
  return sp::contraction(sp::canonical_inclusion(x), 0).is_zero();
}

}  // namespace chw::ch
