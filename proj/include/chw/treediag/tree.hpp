#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chw/symplectic/helem.hpp"

namespace chw::tree {

using linalg::Rational;
using sp::HElem;
using sp::Symbol;
using sp::Word;

// Reference to a vertex: nodes are 0..n-1, leaf i is encoded as -1-i.
using VertexRef = int;
constexpr VertexRef leaf_ref(int i) { return -1 - i; }
constexpr bool is_leaf(VertexRef r) { return r < 0; }
constexpr int leaf_index(VertexRef r) { return -1 - r; }

// Uni-trivalent tree whose trivalent vertices carry a cyclic order and
// whose leaves are labeled by elements of H. Degree = number of trivalent
// vertices; a degree-d tree has d+2 leaves.
struct TreeDiagram {
  int genus = 1;
  std::vector<HElem> labels;
  std::vector<int> leaf_node;                // trivalent neighbour of each leaf
  std::vector<std::array<VertexRef, 3>> nodes;  // cyclic order of neighbours

  int degree() const { return static_cast<int>(nodes.size()); }
  std::size_t leaves() const { return labels.size(); }
  void validate() const;
};

// Planar binary tree with labeled leaves; [x, y] is a node with children x, y.
struct Planar {
  std::optional<HElem> leaf;
  std::vector<Planar> kids;

  static Planar of(const HElem& x);
  static Planar node(Planar x, Planar y);
};

// Tree rooted at a leaf labeled `root` whose bracketing is `body`.
TreeDiagram from_rooted(const HElem& root, const Planar& body);

// Named constructors for the drawn tree shapes.
// tripod(p, q, r): rooted at p its bracketing is [r, q].
TreeDiagram tripod(const HElem& p, const HElem& q, const HElem& r);
// htree(c, b, a, d): leaves c, d share one node and a, b the other;
// rooted at c the bracketing is [d, [a, b]].
TreeDiagram htree(const HElem& c, const HElem& b, const HElem& a, const HElem& d);
// tree5(p1, .., p5): p1 at the middle node, {p2, p3} and {p4, p5} on the end
// nodes; rooted at p1 the bracketing is [[p4, p5], [p2, p3]].
TreeDiagram tree5(const HElem& p1, const HElem& p2, const HElem& p3, const HElem& p4, const HElem& p5);

// Reverses the cyclic order at one node (an AS move).
TreeDiagram flip(const TreeDiagram& t, int node);

// Joins leaf v of p and leaf w of q into an edge.
TreeDiagram glue(const TreeDiagram& p, int v, const TreeDiagram& q, int w);

// Planar structure seen from a leaf.
Planar rooted_at(const TreeDiagram& t, int leaf);

// Canonical key of a tree whose labels are single basis symbols with
// coefficient 1: encoding word and sign, or nullopt if the tree is zero by AS.
std::optional<std::pair<Word, int>> canonical_key(const TreeDiagram& t);
TreeDiagram decode(int genus, const Word& key);

std::string to_sexpr(const Planar& p);
// (rooted x S S) form of a basis tree key.
std::string key_sexpr(const Word& key);

constexpr Symbol kNodeMarker = 0xFF;

}  // namespace chw::tree
