#include "chw/treediag/combo.hpp"

#include <functional>

#include "chw/error.hpp"

namespace chw::tree {

TreeCombo::TreeCombo(int genus, int degree) : genus_(genus), degree_(degree) {
  sp::check_genus(genus);
  if (degree < 1) throw DomainError("tree degree must be positive");
}

void TreeCombo::add_key(const Word& key, const Rational& c) { linalg::add_term(terms_, key, c); }

void TreeCombo::add_tree(const TreeDiagram& t, const Rational& c) {
  sp::require_same_genus(genus_, t.genus);
  if (t.degree() != degree_) throw DomainError("tree degree mismatch");
  t.validate();
  TreeDiagram basis = t;
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& acc) {
    if (i == t.leaves()) {
      auto key = canonical_key(basis);
      if (key) add_key(key->first, key->second > 0 ? acc : Rational(-acc));
      return;
    }
    for (const auto& [s, d] : t.labels[i].coeffs) {
      basis.labels[i] = HElem::basis(genus_, s);
      rec(i + 1, acc * d);
    }
  };
  rec(0, c);
}

void TreeCombo::require_compatible(const TreeCombo& y) const {
  sp::require_same_genus(genus_, y.genus_);
  if (degree_ != y.degree_) throw DomainError("tree degree mismatch");
}

TreeCombo& TreeCombo::operator+=(const TreeCombo& y) {
  require_compatible(y);
  linalg::axpy(terms_, Rational(1), y.terms_);
  return *this;
}

TreeCombo& TreeCombo::operator-=(const TreeCombo& y) {
  require_compatible(y);
  linalg::axpy(terms_, Rational(-1), y.terms_);
  return *this;
}

TreeCombo& TreeCombo::operator*=(const Rational& c) {
  terms_ = linalg::scaled(terms_, c);
  return *this;
}

TreeCombo expand_multilinear(const TreeDiagram& t) {
  TreeCombo out(t.genus, t.degree());
  out.add_tree(t);
  return out;
}

lie::Tensor brack_tensor(const Planar& p) {
  if (p.leaf) {
    lie::Tensor t;
    for (const auto& [s, c] : p.leaf->coeffs) linalg::add_term(t, Word{s}, c);
    return t;
  }
  return lie::tensor_commutator(brack_tensor(p.kids[0]), brack_tensor(p.kids[1]));
}

lie::LieElem brack(const TreeDiagram& t, int root_leaf) {
  t.validate();
  if (root_leaf < 0 || root_leaf >= static_cast<int>(t.leaves())) throw DomainError("no such leaf");
  return lie::from_tensor(t.genus, brack_tensor(rooted_at(t, root_leaf)));
}

TreeCombo tree_bracket(const TreeCombo& p, const TreeCombo& q) {
  sp::require_same_genus(p.genus(), q.genus());
  TreeCombo out(p.genus(), p.degree() + q.degree());
  for (const auto& [kp, cp] : p.terms()) {
    TreeDiagram P = decode(p.genus(), kp);
    for (const auto& [kq, cq] : q.terms()) {
      TreeDiagram Q = decode(q.genus(), kq);
      for (std::size_t v = 0; v < P.leaves(); ++v)
        for (std::size_t w = 0; w < Q.leaves(); ++w) {
          Rational x = sp::intersection(P.labels[v], Q.labels[w]);
          if (sgn(x) == 0) continue;
          out.add_tree(glue(P, static_cast<int>(v), Q, static_cast<int>(w)), cp * cq * x);
        }
    }
  }
  return out;
}

lie::Tensor eta_tensor(const TreeDiagram& t) {
  t.validate();
  lie::Tensor out;
  for (std::size_t v = 0; v < t.leaves(); ++v) {
    lie::Tensor b = brack_tensor(rooted_at(t, static_cast<int>(v)));
    for (const auto& [s, c] : t.labels[v].coeffs)
      for (const auto& [w, d] : b) linalg::add_term(out, sp::concat(Word{s}, w), c * d);
  }
  return out;
}

lie::Tensor eta_tensor(const TreeCombo& x) {
  lie::Tensor out;
  for (const auto& [k, c] : x.terms()) linalg::axpy(out, c, eta_tensor(decode(x.genus(), k)));
  return out;
}

lie::HomLElem eta(const TreeCombo& x) { return lie::homl_from_tensor(x.genus(), eta_tensor(x)); }

bool is_zero_mod_relations(const TreeCombo& x) { return eta_tensor(x).empty(); }

namespace {

std::array<VertexRef, 3> rotate_to(const std::array<VertexRef, 3>& n, VertexRef r, int pos) {
  for (int k = 0; k < 3; ++k)
    if (n[k] == r) {
      std::array<VertexRef, 3> out{};
      for (int i = 0; i < 3; ++i) out[(pos + i) % 3] = n[(k + i) % 3];
      return out;
    }
  throw DomainError("malformed tree");
}

Symbol leaf_symbol(const TreeDiagram& t, VertexRef r) {
  if (!is_leaf(r)) throw DomainError("expected a leaf");
  return t.labels[leaf_index(r)].coeffs.begin()->first;
}

}  // namespace

sp::MultiElem q_map(const TreeCombo& x) {
  if (x.degree() != 2) throw DomainError("q is defined on degree-2 trees");
  const int g = x.genus();
  sp::MultiElem out(g, sp::space_wedge(2));
  for (const auto& [k, coef] : x.terms()) {
    TreeDiagram t = decode(g, k);
    // first node as (c, d, e), second node as (b, e, a)
    auto n0 = rotate_to(t.nodes[0], 1, 2);
    auto n1 = rotate_to(t.nodes[1], 0, 1);
    Symbol c = leaf_symbol(t, n0[0]), d = leaf_symbol(t, n0[1]);
    Symbol bb = leaf_symbol(t, n1[0]), a = leaf_symbol(t, n1[2]);
    auto term = [&](int w, Symbol u, Symbol v, Symbol y, Symbol z) {
      int p = sp::pairing(u, v);
      if (p != 0) out.add_word(Word{y, z}, coef * (w * p));
    };
    term(4, a, bb, c, d);
    term(4, c, d, a, bb);
    term(2, d, a, bb, c);
    term(2, bb, c, d, a);
    term(2, a, c, bb, d);
    term(2, d, bb, c, a);
  }
  return out;
}

sp::MultiElem tr3(const TreeCombo& x, Tr3Variant variant) {
  if (x.degree() != 3) throw DomainError("Tr3 is defined on degree-3 trees");
  const int g = x.genus();
  sp::MultiElem out(g, sp::space_sym(3));
  if (variant == Tr3Variant::TraceOracle) {
    for (const auto& [w, c] : eta_tensor(x)) {
      int p = sp::pairing(w[0], w[1]);
      if (p != 0) out.add_word(Word{w[2], w[3], w[4]}, c * p);
    }
    return out;
  }
  for (const auto& [k, coef] : x.terms()) {
    TreeDiagram t = decode(g, k);
    // middle node: the one with exactly one leaf
    int mid = -1;
    for (int n = 0; n < 3; ++n) {
      int leaves = 0;
      for (VertexRef r : t.nodes[n]) leaves += is_leaf(r);
      if (leaves == 1) mid = n;
    }
    if (mid < 0) throw DomainError("degree-3 tree without a middle node");
    std::array<VertexRef, 3> m{};
    for (int i = 0; i < 3; ++i)
      if (is_leaf(t.nodes[mid][i])) m = rotate_to(t.nodes[mid], t.nodes[mid][i], 0);
    auto nb = rotate_to(t.nodes[m[1]], mid, 0);
    auto na = rotate_to(t.nodes[m[2]], mid, 0);
    Symbol p1 = leaf_symbol(t, m[0]), p2 = leaf_symbol(t, na[1]), p3 = leaf_symbol(t, na[2]);
    Symbol p4 = leaf_symbol(t, nb[1]), p5 = leaf_symbol(t, nb[2]);
    // printed argument order (x3, x2, x1, x5, x4) = (p1, ..., p5)
    Symbol x1 = p3, x2 = p2, x3 = p1, x4 = p5, x5 = p4;
    auto term = [&](Symbol u, Symbol v, Symbol y1, Symbol y2, Symbol y3) {
      int p = sp::pairing(u, v);
      if (p != 0) out.add_word(Word{y1, y2, y3}, coef * (2 * p));
    };
    term(x5, x1, x2, x3, x4);
    term(x1, x4, x5, x3, x2);
    term(x4, x2, x1, x3, x5);
    term(x2, x5, x2, x3, x1);
  }
  return out;
}

std::string to_sexpr(const TreeCombo& x) {
  if (x.is_zero()) return "0";
  std::vector<std::string> parts;
  for (const auto& [k, c] : x.terms()) {
    std::string t = key_sexpr(k);
    parts.push_back(c == 1 ? t : "(* " + c.get_str() + " " + t + ")");
  }
  if (parts.size() == 1) return parts[0];
  std::string s = "(+";
  for (const auto& p : parts) s += " " + p;
  return s + ")";
}

}  // namespace chw::tree
