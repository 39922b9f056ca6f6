#include <gtest/gtest.h>

#include <map>

#include "chw/error.hpp"
#include "chw/linalg/matrix.hpp"
#include "chw/symplectic/equivariant.hpp"
#include "chw/symplectic/linmap.hpp"
#include "chw/symplectic/weights.hpp"

using namespace chw::sp;
using chw::linalg::Integer;
using chw::linalg::Rational;

namespace {

constexpr Symbol a(int i) { return sym_a(i); }
constexpr Symbol b(int i) { return sym_b(i); }

HElem h(int g, Symbol s, Rational c = 1) { return HElem::basis(g, s, c); }

MultiElem w3(int g, Symbol x, Symbol y, Symbol z, Rational c = 1) { return wedge_of(g, {x, y, z}, c); }

MultiElem ww(const MultiElem& x, const MultiElem& y) { return outer_wedge({x, y}); }

Integer binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

TEST(Intersection, Examples) {
  EXPECT_EQ(intersection(h(3, a(1)), h(3, b(1))), 1);
  EXPECT_EQ(intersection(h(3, a(1)), h(3, a(2))), 0);
  EXPECT_EQ(intersection(h(3, b(3)), h(3, a(3))), -1);
  EXPECT_THROW(intersection(h(3, a(1)), h(4, b(1))), chw::GenusMismatch);
}

TEST(Intersection, AntisymmetricNondegenerate) {
  const int g = 4;
  auto syms = alphabet(g);
  chw::linalg::RatMatrix m(2 * g, 2 * g);
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = 0; j < syms.size(); ++j) {
      Rational v = intersection(h(g, syms[i]), h(g, syms[j]));
      EXPECT_EQ(v, -intersection(h(g, syms[j]), h(g, syms[i])));
      m.set(i, j, v);
    }
  EXPECT_EQ(chw::linalg::rank(m), static_cast<std::size_t>(2 * g));
}

TEST(PoincareDual, Examples) {
  chw::linalg::SparseVec<Symbol> e1{{b(2), 1}};
  EXPECT_EQ(poincare_dual(h(3, a(2))), e1);
  chw::linalg::SparseVec<Symbol> e2{{a(2), -1}};
  EXPECT_EQ(poincare_dual(h(3, b(2))), e2);
  chw::linalg::SparseVec<Symbol> e3{{a(1), -1}, {b(1), 1}};
  EXPECT_EQ(poincare_dual(h(3, a(1)) + h(3, b(1))), e3);
}

TEST(Normalization, WedgeRules) {
  const int g = 3;
  EXPECT_TRUE(wedge_of(g, {a(1), a(1), a(2)}).is_zero());
  EXPECT_EQ(wedge_of(g, {a(2), a(1)}), wedge_of(g, {a(1), a(2)}, -1));
  EXPECT_EQ(wedge_of(g, {b(1), a(3), a(2)}), wedge_of(g, {a(2), a(3), b(1)}, -1));
  // outer wedge is alternating in the inner words
  auto x = w3(g, a(1), b(1), a(2)), y = w3(g, a(3), b(2), b(3));
  EXPECT_EQ(ww(x, y), -ww(y, x));
  EXPECT_TRUE(ww(x, x).is_zero());
  // symmetric factors commute
  auto s1 = basis_elem(g, space_sym(3), {b(1), a(1), a(1)});
  auto s2 = basis_elem(g, space_sym(3), {a(1), b(1), a(1)});
  EXPECT_EQ(s1, s2);
  EXPECT_THROW(wedge_of(2, {a(3)}), chw::GenusMismatch);
  EXPECT_THROW(wedge_of(3, {a(1)}) + wedge_of(3, {a(1), a(2)}), chw::SpaceMismatch);
}

TEST(IsSymplectic, Examples) {
  EXPECT_TRUE(is_symplectic(LinMap::identity(4)));
  LinMap swap(4);
  for (int i = 1; i <= 4; ++i) {
    swap.set_image(b(i), h(4, a(i)));
    swap.set_image(a(i), h(4, b(i), -1));
  }
  EXPECT_TRUE(is_symplectic(swap));
  auto literal = LinMap::substitution(
      4, {{a(2), h(4, a(2)) + h(4, b(2)) - h(4, b(3))}, {a(3), h(4, a(3)) + h(4, b(3)) - h(4, a(2))}});
  EXPECT_FALSE(is_symplectic(literal));
  EXPECT_EQ(intersection(literal.image(a(2)), literal.image(a(3))), 2);
  auto tv = LinMap::transvection(h(4, b(2)) - h(4, b(3)));
  EXPECT_TRUE(is_symplectic(tv));
  EXPECT_EQ(tv.image(a(2)), h(4, a(2)) + h(4, b(2)) - h(4, b(3)));
  EXPECT_EQ(tv.image(a(3)), h(4, a(3)) + h(4, b(3)) - h(4, b(2)));
}

TEST(Induced, DifferenceStepOfTheTwoTwoOneOneCycle) {
  const int g = 4;
  auto P = w3(g, a(1), b(1), b(4)), Q = w3(g, a(2), b(2), b(4)), R = w3(g, a(3), b(3), b(4));
  auto W = w3(g, b(2), b(3), b(4)), V = w3(g, a(2), b(3), b(4));
  auto X = ww(P, Q) + ww(Q, R) + ww(R, P);

  // transvection x -> x + (x . v) v with v = b2 - b3
  auto tv = LinMap::transvection(h(g, b(2)) - h(g, b(3)));
  auto step = Endo::identity() - Endo::induced(tv);
  EXPECT_EQ(step(X), Rational(-2) * ww(P, W) + ww(Q, W) + ww(R, W));

  // literal substitution; hand expansion of X - sigma(X)
  auto literal = LinMap::substitution(
      g, {{a(2), h(g, a(2)) + h(g, b(2)) - h(g, b(3))}, {a(3), h(g, a(3)) + h(g, b(3)) - h(g, a(2))}});
  auto lit = (Endo::identity() - Endo::induced(literal))(X);
  EXPECT_EQ(lit, -ww(P, W) + ww(Q, V) + ww(R, W) + ww(W, V) - ww(P, V));
  EXPECT_NE(lit, step(X));
}

TEST(Induced, Relabeling) {
  const int g = 4;
  LinMap f(g);
  f.set_image(a(4), h(g, a(1)));
  f.set_image(a(1), h(g, a(3)));
  f.set_image(a(3), h(g, a(4)));
  f.set_image(b(4), h(g, b(1)));
  f.set_image(b(1), h(g, b(3)));
  f.set_image(b(3), h(g, b(4)));
  auto x = tensor(wedge_of(g, {b(4), b(2), b(1), b(3)}, -6), wedge_of(g, {b(4), b(2)}));
  auto y = tensor(wedge_of(g, {b(1), b(2), b(3), b(4)}, -6), wedge_of(g, {b(1), b(2)}));
  EXPECT_EQ(induced(f, x), y);
  EXPECT_EQ(induced(LinMap::identity(g), x), x);
}

TEST(Contraction, Examples) {
  EXPECT_EQ(contraction(w3(4, a(1), b(1), b(4))), wedge_of(4, {b(4)}));
  EXPECT_TRUE(contraction(w3(4, a(1), b(1), b(4)) - w3(4, a(3), b(3), b(4))).is_zero());
  // C3 = (x.y)z + (y.z)x + (z.x)y
  EXPECT_EQ(contraction(w3(3, a(1), a(2), b(1))), wedge_of(3, {a(2)}, -1));
  const int g = 5;
  auto x6 = wedge_of(g, {a(2), b(2), a(4), b(4), b(3), b(5)}, 6) - wedge_of(g, {a(1), b(1), a(4), b(4), b(3), b(5)}, 6);
  auto c6 = contraction(x6);
  EXPECT_EQ(c6, wedge_of(g, {a(2), b(2), b(3), b(5)}, 6) - wedge_of(g, {a(1), b(1), b(3), b(5)}, 6));
  EXPECT_TRUE(contraction(c6).is_zero());
  EXPECT_THROW(contraction(wedge_of(g, {a(1)})), chw::SpaceMismatch);
}

TEST(CanonicalInclusion, Examples) {
  const int g = 6;
  auto x = h(g, a(1)), y = h(g, b(2));
  auto xy = wedge_of(g, {a(1), b(2)});
  auto expect = basis_elem(g, space_tensor(2), {a(1), b(2)}) - basis_elem(g, space_tensor(2), {b(2), a(1)});
  EXPECT_EQ(canonical_inclusion(xy), expect);
  auto B1 = w3(g, b(1), b(2), b(4)), B2 = w3(g, b(2), b(3), b(4));
  EXPECT_EQ(canonical_inclusion(Rational(3) * ww(B1, B2)), Rational(3) * tensor(B1, B2) - Rational(3) * tensor(B2, B1));
  auto C1 = w3(g, b(1), b(2), b(3)), C2 = w3(g, b(4), b(5), b(6));
  EXPECT_EQ(canonical_inclusion(Rational(6) * ww(C1, C2)), Rational(6) * tensor(C1, C2) - Rational(6) * tensor(C2, C1));
}

TEST(Multiply, Examples) {
  const int g = 6;
  EXPECT_TRUE(multiply(tensor(wedge_of(g, {a(1), a(2)}), wedge_of(g, {a(1), a(3)}))).is_zero());
  auto C1 = w3(g, b(1), b(2), b(3)), C2 = w3(g, b(4), b(5), b(6));
  auto i2 = Rational(6) * tensor(C1, C2) - Rational(6) * tensor(C2, C1);
  EXPECT_EQ(multiply(i2), wedge_of(g, {b(1), b(2), b(3), b(4), b(5), b(6)}, 12));
}

TEST(Jacobi, Examples) {
  const int g = 4;
  auto j = jacobi(w3(g, b(1), b(2), b(4)));
  auto t = [&](Symbol u, Symbol v, Symbol w) { return tensor(wedge_of(g, {u}), wedge_of(g, {v, w})); };
  auto hv = [&](Symbol u, Symbol v, Symbol w) {
    return tensor(MultiElem(basis_elem(g, space_h(), {u})), wedge_of(g, {v, w}));
  };
  (void)t;
  EXPECT_EQ(j, hv(b(1), b(2), b(4)) + hv(b(2), b(4), b(1)) + hv(b(4), b(1), b(2)));
  EXPECT_TRUE(jacobi(w3(g, a(1), a(1), a(2))).is_zero());
  EXPECT_EQ(jacobi(w3(g, a(1), a(2), a(3))).terms().size(), 3u);
}

TEST(PartialContract5, Examples) {
  const int g = 3;
  auto x = basis_elem(g, space_tensor(5), {a(1), b(1), a(2), a(3), a(1)});
  auto expect = tensor(wedge_of(g, {a(2), a(3)}), basis_elem(g, space_h(), {a(1)}));
  EXPECT_EQ(partial_contract5(x), expect);
  EXPECT_TRUE(partial_contract5(basis_elem(g, space_tensor(5), {a(1), a(2), b(1), b(2), b(3)})).is_zero());
}

TEST(Weights, HighestWeightVectors) {
  auto v = tensor(wedge_of(4, {a(1), a(2), a(3), a(4)}, -6), wedge_of(4, {a(1), a(2)}));
  EXPECT_TRUE(is_highest_weight(v, IrrepLabel::parse("2,2,1,1")));
  EXPECT_FALSE(is_highest_weight(v, IrrepLabel::parse("2,2,1")));
  auto v6 = wedge_of(6, {a(1), a(2), a(3), a(4), a(5), a(6)}, 12);
  EXPECT_TRUE(is_highest_weight(v6, IrrepLabel::parse("1,1,1,1,1,1")));
  auto z = wedge_of(3, {a(1), b(1)});
  for (auto l : {"0", "1,1", "2"}) EXPECT_FALSE(is_highest_weight(z, IrrepLabel::parse(l)));
  // a1^a2 is killed by every raising operator
  EXPECT_TRUE(is_highest_weight(wedge_of(3, {a(1), a(2)}, 8), IrrepLabel::parse("1,1")));
  EXPECT_FALSE(is_highest_weight(wedge_of(3, {a(1), a(3)}), IrrepLabel::parse("1,1")));
}

TEST(Weights, WeylDimensions) {
  for (int g = 1; g <= 8; ++g) {
    EXPECT_EQ(weyl_dim(IrrepLabel::parse("0"), g), 1);
    EXPECT_EQ(weyl_dim(IrrepLabel::parse("1"), g), 2 * g);
    EXPECT_EQ(weyl_dim(IrrepLabel::parse("2"), g), binom(2 * g + 1, 2));
    if (g >= 2) {
      EXPECT_EQ(weyl_dim(IrrepLabel::parse("1,1"), g), binom(2 * g, 2) - 1);
    }
    if (g >= 3) {
      EXPECT_EQ(weyl_dim(IrrepLabel::parse("1,1,1"), g), binom(2 * g, 3) - 2 * g);
    }
  }
  EXPECT_EQ(weyl_dim(IrrepLabel::parse("1,1,1,1"), 3), binom(6, 4) - binom(6, 2));
  EXPECT_EQ(weyl_dim(IrrepLabel::parse("1,1,1"), 6), 208);
}

TEST(Weights, WedgeSquareOfUDecomposition) {
  const std::vector<std::pair<int, std::vector<std::string>>> table = {
      {3, {"0", "2,2"}},
      {4, {"0", "2,2", "1,1", "2,2,1,1"}},
      {5, {"0", "2,2", "1,1", "2,2,1,1", "1,1,1,1"}},
  };
  auto all = std::vector<std::string>{"0", "2,2", "1,1", "2,2,1,1", "1,1,1,1", "1,1,1,1,1,1"};
  for (int g = 3; g <= 8; ++g) {
    std::vector<std::string> labels = all;
    for (const auto& [gg, l] : table)
      if (gg == g) labels = l;
    Integer sum = 0;
    for (const auto& l : labels) sum += weyl_dim(IrrepLabel::parse(l), g);
    Integer u = binom(2 * g, 3) - 2 * g;
    EXPECT_EQ(sum, u * (u - 1) / 2) << "g=" << g;
  }
}

TEST(Weights, WeightMultiplicityOracle) {
  // dim [1,1,1] at g=3 from weight multiplicities of Ker C3: count words of
  // Wedge^3 H minus those of H, weight by weight
  const int g = 3;
  std::map<Weight, int> mult;
  auto syms = alphabet(g);
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      for (std::size_t k = j + 1; k < syms.size(); ++k) ++mult[weight_of(Word{syms[i], syms[j], syms[k]}, g)];
  for (Symbol s : syms) --mult[weight_of(Word{s}, g)];
  int total = 0;
  for (const auto& [w, m] : mult) {
    EXPECT_GE(m, 0);
    total += m;
  }
  EXPECT_EQ(Integer(total), weyl_dim(IrrepLabel::parse("1,1,1"), g));
  EXPECT_EQ((mult[Weight{1, 1, 1}]), 1);
}
