#include <gtest/gtest.h>

#include <random>

#include "chw/error.hpp"
#include "chw/freelie/homl.hpp"
#include "chw/freelie/lyndon.hpp"
#include "chw/symplectic/equivariant.hpp"
#include "chw/symplectic/weights.hpp"
#include "chw/treediag/basis.hpp"
#include "chw/treediag/bch.hpp"
#include "chw/treediag/random.hpp"

using namespace chw::tree;
using chw::lie::Tensor;
using chw::linalg::Integer;
using chw::sp::MultiElem;
using chw::sp::sym_a;
using chw::sp::sym_b;

namespace {

HElem A(int g, int i) { return HElem::basis(g, sym_a(i)); }
HElem B(int g, int i) { return HElem::basis(g, sym_b(i)); }

Tensor T(const HElem& x) {
  Tensor t;
  for (const auto& [s, c] : x.coeffs) chw::linalg::add_term(t, Word{s}, c);
  return t;
}
Tensor br(const Tensor& x, const Tensor& y) { return chw::lie::tensor_commutator(x, y); }
Tensor tag(const HElem& x, const Tensor& y) {
  Tensor out;
  for (const auto& [s, c] : x.coeffs)
    for (const auto& [w, d] : y) chw::linalg::add_term(out, chw::sp::concat(Word{s}, w), c * d);
  return out;
}
Tensor sum(std::initializer_list<Tensor> xs) {
  Tensor out;
  for (const auto& x : xs) chw::linalg::axpy(out, Rational(1), x);
  return out;
}

TreeCombo combo(const TreeDiagram& t, const Rational& c = 1) {
  TreeCombo x(t.genus, t.degree());
  x.add_tree(t, c);
  return x;
}

MultiElem five_tensor(const TreeCombo& x) {
  MultiElem out(x.genus(), chw::sp::space_tensor(5));
  for (const auto& [w, c] : eta_tensor(x)) out.add_word(w, c);
  return out;
}

}  // namespace

TEST(TreeDiagram, MultilinearExpansion) {
  const int g = 3;
  auto x = expand_multilinear(tripod(A(g, 1) + B(g, 1), A(g, 2), A(g, 3)));
  EXPECT_EQ(x, combo(tripod(A(g, 1), A(g, 2), A(g, 3))) + combo(tripod(B(g, 1), A(g, 2), A(g, 3))));
  EXPECT_EQ(expand_multilinear(tripod(Rational(2) * A(g, 1), A(g, 2), A(g, 3))),
            combo(tripod(A(g, 1), A(g, 2), A(g, 3)), 2));
  EXPECT_TRUE(expand_multilinear(tripod(HElem(g), A(g, 2), A(g, 3))).is_zero());
}

TEST(TreeDiagram, CanonicalKeyRespectsAs) {
  const int g = 3;
  auto t = htree(A(g, 1), B(g, 2), A(g, 3), B(g, 1));
  for (int n = 0; n < 2; ++n) EXPECT_EQ(combo(flip(t, n)), combo(t, -1));
  // a node with two equal leaves vanishes
  EXPECT_TRUE(combo(tripod(A(g, 1), A(g, 2), A(g, 2))).is_zero());
  // rotating the cyclic order does not change the tree
  EXPECT_EQ(combo(tripod(A(g, 1), A(g, 2), A(g, 3))), combo(tripod(A(g, 2), A(g, 3), A(g, 1))));
  auto x = combo(t);
  EXPECT_EQ(x.terms().size(), 1u);
  EXPECT_EQ(combo(decode(g, x.terms().begin()->first)), x);
}

TEST(Brack, FiveLeafExample) {
  const int g = 3;
  HElem a = A(g, 1), b = A(g, 2), c = B(g, 3), d = B(g, 1), e = A(g, 3), root = B(g, 2);
  auto t = from_rooted(root, Planar::node(Planar::of(a), Planar::node(Planar::node(Planar::of(b), Planar::of(c)),
                                                                    Planar::node(Planar::of(d), Planar::of(e)))));
  auto expected = chw::lie::from_tensor(g, br(T(a), br(br(T(b), T(c)), br(T(d), T(e)))));
  EXPECT_EQ(brack(t, 0), expected);
  EXPECT_THROW(brack(t, 6), chw::DomainError);
}

TEST(Brack, TripodAndTree5Conventions) {
  const int g = 3;
  HElem p = A(g, 1), q = A(g, 2), r = A(g, 3), s = B(g, 1), u = B(g, 2);
  EXPECT_EQ(brack(tripod(p, q, r), 0), chw::lie::from_tensor(g, br(T(r), T(q))));
  EXPECT_EQ(brack(htree(p, q, r, s), 0), chw::lie::from_tensor(g, br(T(s), br(T(r), T(q)))));
  EXPECT_EQ(brack(tree5(p, q, r, s, u), 0), chw::lie::from_tensor(g, br(br(T(s), T(u)), br(T(q), T(r)))));
}

TEST(Eta, DegreeOneCorrespondence) {
  const int g = 3;
  HElem x = A(g, 1), y = B(g, 2), z = A(g, 3);
  // the tripod drawn with x, z, y corresponds to x ^ y ^ z
  Tensor expected = sum({tag(x, br(T(y), T(z))), tag(y, br(T(z), T(x))), tag(z, br(T(x), T(y)))});
  EXPECT_EQ(eta_tensor(tripod(x, z, y)), expected);
}

TEST(Eta, HTreeExample) {
  const int g = 3;
  HElem y = A(g, 1), x = B(g, 2), w = A(g, 3), z = B(g, 1);
  Tensor expected = sum({tag(x, br(br(T(y), T(z)), T(w))), tag(y, br(T(z), br(T(w), T(x)))),
                         tag(z, br(br(T(w), T(x)), T(y))), tag(w, br(T(x), br(T(y), T(z))))});
  EXPECT_EQ(eta_tensor(htree(y, x, w, z)), expected);
}

TEST(Eta, KillsAsAndIhx) {
  std::mt19937 rng(11);
  for (int g : {2, 3})
    for (int d : {2, 3})
      for (int trial = 0; trial < 25; ++trial) {
        HElem root = random_label(g, rng);
        auto u = random_planar(g, 1, rng), v = random_planar(g, d - 1, rng), w = random_planar(g, 1, rng);
        TreeCombo ihx(g, d);
        ihx.add_tree(from_rooted(root, Planar::node(u, Planar::node(v, w))));
        ihx.add_tree(from_rooted(root, Planar::node(v, Planar::node(w, u))));
        ihx.add_tree(from_rooted(root, Planar::node(w, Planar::node(u, v))));
        EXPECT_TRUE(is_zero_mod_relations(ihx));
        auto t = from_rooted(root, random_planar(g, d + 1, rng));
        std::uniform_int_distribution<int> node(0, d - 1);
        TreeCombo as(g, d);
        as.add_tree(t);
        as.add_tree(flip(t, node(rng)));
        EXPECT_TRUE(as.is_zero());
        EXPECT_TRUE(is_zero_mod_relations(as));
      }
}

TEST(Eta, LandsInBracketKernel) {
  std::mt19937 rng(12);
  for (int d : {1, 2, 3}) {
    auto x = random_combo(2, d, rng);
    Tensor t = eta_tensor(x);
    Tensor image;
    for (const auto& [w, c] : t) {
      Tensor l = chw::lie::tensor_letter(w[0]);
      Tensor rest;
      rest.emplace(w.slice(1, w.size() - 1), c);
      chw::linalg::axpy(image, Rational(1), chw::lie::tensor_commutator(l, rest));
    }
    EXPECT_TRUE(image.empty());
  }
}

TEST(Eta, RankMatchesJohnsonTarget) {
  for (int g : {2, 3})
    for (int d : {1, 2, 3}) {
      auto r = eta_rank(g, d);
      EXPECT_EQ(Integer(static_cast<unsigned long>(r.rank)), chw::lie::h_dim(g, d)) << "g=" << g << " d=" << d;
    }
}

TEST(TreeBracket, SMapIntermediate) {
  const int g = 4;
  auto p = combo(tripod(A(g, 1), A(g, 3), B(g, 3))) - combo(tripod(A(g, 1), A(g, 4), B(g, 4)));
  auto q = combo(tripod(A(g, 2), A(g, 3), B(g, 3))) - combo(tripod(A(g, 2), A(g, 4), B(g, 4)));
  auto expected = combo(htree(A(g, 1), A(g, 2), A(g, 3), B(g, 3))) - combo(htree(A(g, 2), A(g, 1), A(g, 3), B(g, 3))) +
                  combo(htree(A(g, 1), A(g, 2), A(g, 4), B(g, 4))) - combo(htree(A(g, 2), A(g, 1), A(g, 4), B(g, 4)));
  EXPECT_TRUE(is_zero_mod_relations(tree_bracket(p, q) - expected));
  auto pq = combo(tripod(A(g, 1), A(g, 3), B(g, 3)));
  auto qq = combo(tripod(A(g, 2), A(g, 3), B(g, 3)));
  EXPECT_TRUE(is_zero_mod_relations(tree_bracket(pq, qq) - combo(htree(A(g, 1), A(g, 2), A(g, 3), B(g, 3))) +
                                    combo(htree(A(g, 2), A(g, 1), A(g, 3), B(g, 3)))));
}

TEST(TreeBracket, NineGluingsOfTwoTripods) {
  const int g = 3;
  auto p = combo(tripod(A(g, 1), A(g, 2), A(g, 3)));
  auto q = combo(tripod(B(g, 1), B(g, 2), B(g, 3)));
  auto x = tree_bracket(p, q);
  // three of the nine leaf pairs intersect; the glued trees are distinct
  EXPECT_EQ(x.terms().size(), 3u);
  for (const auto& [k, c] : x.terms()) EXPECT_EQ(abs(c), 1);
}

TEST(TreeBracket, EtaIsHomomorphism) {
  const int g = 2;
  std::mt19937 rng(13);
  for (auto [d1, d2] : {std::pair{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}, {3, 1}})
    for (int trial = 0; trial < 6; ++trial) {
      auto p = random_combo(g, d1, rng), q = random_combo(g, d2, rng);
      EXPECT_EQ(eta(tree_bracket(p, q)), chw::lie::derivation_bracket(eta(p), eta(q))) << d1 << "," << d2;
    }
}

TEST(TreeBracket, Antisymmetric) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_combo(3, 1, rng), q = random_combo(3, 2, rng);
    EXPECT_TRUE(is_zero_mod_relations(tree_bracket(p, q) + tree_bracket(q, p)));
  }
}

TEST(Xi, FirstElementBracketForm) {
  const int g = 3;
  auto lhs = combo(tree5(A(g, 1), A(g, 1), B(g, 1), A(g, 2), A(g, 1))) -
             combo(tree5(A(g, 1), A(g, 2), A(g, 3), B(g, 3), A(g, 1)));
  auto rhs = tree_bracket(combo(tripod(A(g, 1), A(g, 2), A(g, 3))), combo(htree(A(g, 1), B(g, 1), A(g, 1), B(g, 3))));
  EXPECT_TRUE(is_zero_mod_relations(lhs - rhs));
  auto det = chw::sp::partial_contract5(five_tensor(lhs));
  auto expected = chw::sp::basis_elem(g, chw::sp::tensor_product(chw::sp::space_wedge(2), chw::sp::space_h()),
                                      {sym_a(1), sym_a(2), sym_a(1)}, 9);
  EXPECT_EQ(det, expected);
  EXPECT_TRUE(tr3(lhs).is_zero());
}

TEST(Xi, SecondElement) {
  const int g = 3;
  auto lhs = combo(tree5(A(g, 2), A(g, 2), A(g, 1), A(g, 3), A(g, 2)), -2);
  auto rhs = tree_bracket(combo(tripod(B(g, 1), A(g, 2), A(g, 3))), combo(htree(A(g, 1), A(g, 2), A(g, 1), A(g, 2))));
  EXPECT_TRUE(is_zero_mod_relations(lhs - rhs));
  EXPECT_FALSE(is_zero_mod_relations(lhs));
  EXPECT_TRUE(chw::sp::partial_contract5(five_tensor(lhs)).is_zero());
  EXPECT_TRUE(tr3(lhs).is_zero());
}

TEST(QMap, PrintedValues) {
  const int g = 4;
  EXPECT_EQ(q_map(combo(htree(A(g, 1), A(g, 2), A(g, 3), B(g, 3)))), chw::sp::wedge_of(g, {sym_a(1), sym_a(2)}, 2));
  auto four = combo(htree(A(g, 1), A(g, 2), A(g, 3), B(g, 3))) - combo(htree(A(g, 2), A(g, 1), A(g, 3), B(g, 3))) +
              combo(htree(A(g, 1), A(g, 2), A(g, 4), B(g, 4))) - combo(htree(A(g, 2), A(g, 1), A(g, 4), B(g, 4)));
  EXPECT_EQ(q_map(four), chw::sp::wedge_of(g, {sym_a(1), sym_a(2)}, 8));
  EXPECT_TRUE(q_map(combo(htree(A(g, 1), A(g, 2), A(g, 3), A(g, 4)))).is_zero());
  EXPECT_THROW(q_map(combo(tripod(A(g, 1), A(g, 2), A(g, 3)))), chw::DomainError);
}

TEST(QMap, WellDefinedOnRelations) {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const int g = 3;
    HElem root = random_label(g, rng);
    auto u = random_planar(g, 1, rng), v = random_planar(g, 1, rng), w = random_planar(g, 1, rng);
    TreeCombo ihx(g, 2);
    ihx.add_tree(from_rooted(root, Planar::node(u, Planar::node(v, w))));
    ihx.add_tree(from_rooted(root, Planar::node(v, Planar::node(w, u))));
    ihx.add_tree(from_rooted(root, Planar::node(w, Planar::node(u, v))));
    EXPECT_TRUE(q_map(ihx).is_zero());
  }
}

TEST(Tr3, OracleVanishesOnBrackets) {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_combo(3, 1, rng), q = random_combo(3, 2, rng);
    EXPECT_TRUE(tr3(tree_bracket(p, q)).is_zero());
  }
  EXPECT_TRUE(tr3(TreeCombo(3, 3)).is_zero());
  EXPECT_THROW(tr3(TreeCombo(3, 2)), chw::DomainError);
}

TEST(Tr3, KernelDimension) {
  for (int g : {3}) {
    auto r = tr3_rank(g);
    EXPECT_EQ(Integer(static_cast<unsigned long>(r.dim_t3)), chw::lie::h_dim(g, 3));
    EXPECT_EQ(Integer(static_cast<unsigned long>(r.image_rank)), chw::sp::weyl_dim(chw::sp::IrrepLabel::parse("3"), g));
    EXPECT_EQ(Integer(static_cast<unsigned long>(r.kernel_dim())),
              chw::sp::weyl_dim(chw::sp::IrrepLabel::parse("3,1,1"), g) +
                  chw::sp::weyl_dim(chw::sp::IrrepLabel::parse("2,1"), g));
  }
}

TEST(Bch, Laws) {
  const int g = 2;
  std::mt19937 rng(17);
  auto random_graded = [&](int from) {
    GradedTreeElem x(g, 3);
    for (int d = from; d <= 3; ++d) x.add(random_combo(g, d, rng));
    return x;
  };
  for (int trial = 0; trial < 5; ++trial) {
    auto x = random_graded(1), y = random_graded(1), z = random_graded(1);
    EXPECT_TRUE(equal_mod_relations(bch_truncated(x, GradedTreeElem(g, 3), 3), x));
    EXPECT_TRUE(equal_mod_relations(bch_truncated(x, bch_inverse(x), 3), GradedTreeElem(g, 3)));
    EXPECT_TRUE(equal_mod_relations(bch_truncated(bch_truncated(x, y, 3), z, 3),
                                    bch_truncated(x, bch_truncated(y, z, 3), 3)));
    auto h = random_graded(2);
    EXPECT_TRUE(conjugation_identity_check(x, h));
  }
  EXPECT_THROW(conjugation_identity_check(random_graded(1), random_graded(1)), chw::DomainError);
}

TEST(Tr3, LiteralFormulaComparedWithOracle) {
  const int g = 2;
  std::size_t total = 0, differ = 0;
  for (const auto& [c, keys] : spanning_keys(g, 3))
    for (const auto& k : keys) {
      TreeCombo x(g, 3);
      x.add_key(k, 1);
      ++total;
      differ += !(tr3(x, Tr3Variant::Paper) == tr3(x, Tr3Variant::TraceOracle));
    }
  EXPECT_EQ(total, 60u);
  EXPECT_EQ(differ, 12u);
  EXPECT_EQ(tr3_rank(3, Tr3Variant::Paper).image_rank, 55u);
}
