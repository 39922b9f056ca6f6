#include "chw/treediag/tree.hpp"

#include <algorithm>
#include <functional>

#include "chw/error.hpp"

namespace chw::tree {

void TreeDiagram::validate() const {
  if (nodes.empty()) throw DomainError("tree must have a trivalent vertex");
  if (labels.size() != nodes.size() + 2 || leaf_node.size() != labels.size())
    throw DomainError("malformed tree: leaf count");
  for (std::size_t n = 0; n < nodes.size(); ++n)
    for (VertexRef r : nodes[n]) {
      if (is_leaf(r)) {
        if (leaf_index(r) >= static_cast<int>(labels.size()) || leaf_node[leaf_index(r)] != static_cast<int>(n))
          throw DomainError("malformed tree: leaf link");
      } else {
        const auto& m = nodes.at(r);
        if (std::count(m.begin(), m.end(), static_cast<VertexRef>(n)) != 1)
          throw DomainError("malformed tree: node link");
      }
    }
}

Planar Planar::of(const HElem& x) { return Planar{x, {}}; }

Planar Planar::node(Planar x, Planar y) {
  Planar p;
  p.kids.push_back(std::move(x));
  p.kids.push_back(std::move(y));
  return p;
}

TreeDiagram from_rooted(const HElem& root, const Planar& body) {
  if (body.leaf) throw DomainError("degree-0 tree (single edge) is not allowed");
  TreeDiagram t;
  t.genus = root.genus;
  t.labels.push_back(root);
  t.leaf_node.push_back(0);
  // returns the vertex ref of the subtree attached below `parent`
  std::function<VertexRef(const Planar&, VertexRef)> build = [&](const Planar& p, VertexRef parent) -> VertexRef {
    if (p.leaf) {
      sp::require_same_genus(t.genus, p.leaf->genus);
      t.labels.push_back(*p.leaf);
      t.leaf_node.push_back(is_leaf(parent) ? -1 : parent);
      return leaf_ref(static_cast<int>(t.labels.size()) - 1);
    }
    if (p.kids.size() != 2) throw DomainError("planar tree nodes must be binary");
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back({parent, 0, 0});
    VertexRef x = build(p.kids[0], id);
    VertexRef y = build(p.kids[1], id);
    t.nodes[id][1] = x;
    t.nodes[id][2] = y;
    return id;
  };
  build(body, leaf_ref(0));
  t.validate();
  return t;
}

TreeDiagram tripod(const HElem& p, const HElem& q, const HElem& r) {
  return from_rooted(p, Planar::node(Planar::of(r), Planar::of(q)));
}

TreeDiagram htree(const HElem& c, const HElem& b, const HElem& a, const HElem& d) {
  return from_rooted(c, Planar::node(Planar::of(d), Planar::node(Planar::of(a), Planar::of(b))));
}

TreeDiagram tree5(const HElem& p1, const HElem& p2, const HElem& p3, const HElem& p4, const HElem& p5) {
  return from_rooted(p1, Planar::node(Planar::node(Planar::of(p4), Planar::of(p5)),
                                      Planar::node(Planar::of(p2), Planar::of(p3))));
}

TreeDiagram flip(const TreeDiagram& t, int node) {
  TreeDiagram out = t;
  std::swap(out.nodes.at(node)[1], out.nodes.at(node)[2]);
  return out;
}

TreeDiagram glue(const TreeDiagram& p, int v, const TreeDiagram& q, int w) {
  sp::require_same_genus(p.genus, q.genus);
  TreeDiagram out;
  out.genus = p.genus;
  const int np = p.degree();
  std::vector<int> pmap(p.leaves(), -1), qmap(q.leaves(), -1);
  for (std::size_t i = 0; i < p.leaves(); ++i)
    if (static_cast<int>(i) != v) {
      pmap[i] = static_cast<int>(out.labels.size());
      out.labels.push_back(p.labels[i]);
      out.leaf_node.push_back(p.leaf_node[i]);
    }
  for (std::size_t i = 0; i < q.leaves(); ++i)
    if (static_cast<int>(i) != w) {
      qmap[i] = static_cast<int>(out.labels.size());
      out.labels.push_back(q.labels[i]);
      out.leaf_node.push_back(q.leaf_node[i] + np);
    }
  const int pv = p.leaf_node.at(v), qw = q.leaf_node.at(w) + np;
  for (const auto& n : p.nodes) {
    std::array<VertexRef, 3> m{};
    for (int k = 0; k < 3; ++k) {
      VertexRef r = n[k];
      m[k] = !is_leaf(r) ? r : (leaf_index(r) == v ? qw : leaf_ref(pmap[leaf_index(r)]));
    }
    out.nodes.push_back(m);
  }
  for (const auto& n : q.nodes) {
    std::array<VertexRef, 3> m{};
    for (int k = 0; k < 3; ++k) {
      VertexRef r = n[k];
      m[k] = !is_leaf(r) ? r + np : (leaf_index(r) == w ? pv : leaf_ref(qmap[leaf_index(r)]));
    }
    out.nodes.push_back(m);
  }
  return out;
}

namespace {

// Children of `node` in cyclic order after the neighbour `from`.
std::pair<VertexRef, VertexRef> children(const TreeDiagram& t, int node, VertexRef from) {
  const auto& n = t.nodes[node];
  for (int k = 0; k < 3; ++k)
    if (n[k] == from) return {n[(k + 1) % 3], n[(k + 2) % 3]};
  throw DomainError("malformed tree: missing back edge");
}

Symbol basis_symbol(const HElem& x) {
  if (x.coeffs.size() != 1 || x.coeffs.begin()->second != 1)
    throw DomainError("tree label is not a basis symbol");
  return x.coeffs.begin()->first;
}

}  // namespace

Planar rooted_at(const TreeDiagram& t, int leaf) {
  std::function<Planar(VertexRef, VertexRef)> rec = [&](VertexRef v, VertexRef from) -> Planar {
    if (is_leaf(v)) return Planar::of(t.labels[leaf_index(v)]);
    auto [x, y] = children(t, v, from);
    return Planar::node(rec(x, v), rec(y, v));
  };
  return rec(t.leaf_node.at(leaf), leaf_ref(leaf));
}

std::optional<std::pair<Word, int>> canonical_key(const TreeDiagram& t) {
  std::vector<Symbol> sym;
  for (const auto& l : t.labels) sym.push_back(basis_symbol(l));
  bool zero = false;
  std::function<Word(VertexRef, VertexRef, int&)> enc = [&](VertexRef v, VertexRef from, int& sign) -> Word {
    if (is_leaf(v)) return Word{sym[leaf_index(v)]};
    auto [x, y] = children(t, v, from);
    Word ex = enc(x, v, sign), ey = enc(y, v, sign);
    if (ex == ey) zero = true;
    if (ey < ex) {
      std::swap(ex, ey);
      sign = -sign;
    }
    Word out{kNodeMarker};
    out.append(ex);
    out.append(ey);
    return out;
  };
  std::optional<std::pair<Word, int>> best;
  for (std::size_t r = 0; r < t.leaves(); ++r) {
    int sign = 1;
    Word w{sym[r]};
    w.append(enc(t.leaf_node[r], leaf_ref(static_cast<int>(r)), sign));
    if (zero) return std::nullopt;
    if (!best || w < best->first) {
      best = std::make_pair(w, sign);
    } else if (w == best->first && sign != best->second) {
      return std::nullopt;
    }
  }
  return best;
}

TreeDiagram decode(int genus, const Word& key) {
  std::size_t pos = 1;
  std::function<Planar()> rec = [&]() -> Planar {
    if (pos >= key.size()) throw DomainError("truncated tree key");
    Symbol s = key[pos++];
    if (s != kNodeMarker) return Planar::of(HElem::basis(genus, s));
    Planar x = rec();
    Planar y = rec();
    return Planar::node(std::move(x), std::move(y));
  };
  Planar body = rec();
  return from_rooted(HElem::basis(genus, key[0]), body);
}

std::string to_sexpr(const Planar& p) {
  if (p.leaf) return sp::to_sexpr(*p.leaf);
  return "(" + to_sexpr(p.kids[0]) + " " + to_sexpr(p.kids[1]) + ")";
}

std::string key_sexpr(const Word& key) {
  std::size_t pos = 1;
  std::function<std::string()> rec = [&]() -> std::string {
    Symbol s = key[pos++];
    if (s != kNodeMarker) return sp::symbol_name(s);
    std::string x = rec();
    std::string y = rec();
    return "(" + x + " " + y + ")";
  };
  // top node: children printed as the two subtrees of the rooted form
  pos = 2;
  std::string x = rec();
  std::string y = rec();
  return "(rooted " + sp::symbol_name(key[0]) + " " + x + " " + y + ")";
}

}  // namespace chw::tree
