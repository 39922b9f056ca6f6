#include "chw/treediag/basis.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "chw/linalg/sparse.hpp"

namespace chw::tree {

std::vector<Planar> rooted_shapes(int n) {
  std::vector<Planar> out;
  if (n == 1) {
    out.push_back(Planar{});
    return out;
  }
  for (int k = 1; k < n; ++k)
    for (const auto& l : rooted_shapes(k))
      for (const auto& r : rooted_shapes(n - k)) out.push_back(Planar::node(l, r));
  return out;
}

namespace {

Planar fill(const Planar& shape, int genus, const Word& labels, std::size_t& pos) {
  if (shape.kids.empty()) return Planar::of(HElem::basis(genus, labels[pos++]));
  Planar l = fill(shape.kids[0], genus, labels, pos);
  Planar r = fill(shape.kids[1], genus, labels, pos);
  return Planar::node(std::move(l), std::move(r));
}

}  // namespace

std::vector<Word> content_keys(int genus, const Word& content) {
  const int n = static_cast<int>(content.size());
  std::set<Word> keys;
  Word rest = content.slice(1, content.size() - 1);
  auto shapes = rooted_shapes(n - 1);
  std::vector<Symbol> perm(rest.begin(), rest.end());
  do {
    Word labels;
    for (Symbol s : perm) labels.push_back(s);
    for (const auto& shape : shapes) {
      std::size_t pos = 0;
      auto key = canonical_key(from_rooted(HElem::basis(genus, content[0]), fill(shape, genus, labels, pos)));
      if (key) keys.insert(key->first);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {keys.begin(), keys.end()};
}

std::vector<Word> contents(int genus, int n) {
  auto alpha = sp::alphabet(genus);
  std::vector<Word> out;
  Word cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < alpha.size(); ++i) {
      cur.push_back(alpha[i]);
      rec(i);
      cur = cur.slice(0, cur.size() - 1);
    }
  };
  rec(0);
  return out;
}

std::map<Word, std::vector<Word>> spanning_keys(int genus, int d) {
  std::map<Word, std::vector<Word>> out;
  for (const auto& c : contents(genus, d + 2)) {
    auto keys = content_keys(genus, c);
    if (!keys.empty()) out.emplace(c, std::move(keys));
  }
  return out;
}

std::vector<Word> basis_keys(int genus, int d) {
  std::vector<Word> out;
  for (const auto& [c, keys] : spanning_keys(genus, d)) {
    linalg::Echelon<Word> ech;
    for (const auto& k : keys)
      if (ech.insert(eta_tensor(decode(genus, k)))) out.push_back(k);
  }
  return out;
}

EtaRank eta_rank(int genus, int d) {
  EtaRank r;
  for (const auto& [c, keys] : spanning_keys(genus, d)) {
    linalg::Echelon<Word> ech;
    for (const auto& k : keys) ech.insert(eta_tensor(decode(genus, k)));
    r.spanning += keys.size();
    r.rank += ech.rank();
  }
  return r;
}

Tr3Rank tr3_rank(int genus, Tr3Variant variant) {
  Tr3Rank r;
  linalg::Echelon<Word> image;
  for (const auto& [c, keys] : spanning_keys(genus, 3)) {
    linalg::Echelon<Word> ech;
    for (const auto& k : keys) {
      ech.insert(eta_tensor(decode(genus, k)));
      TreeCombo x(genus, 3);
      x.add_key(k, 1);
      image.insert(tr3(x, variant).terms());
    }
    r.dim_t3 += ech.rank();
  }
  r.image_rank = image.rank();
  return r;
}

}  // namespace chw::tree
