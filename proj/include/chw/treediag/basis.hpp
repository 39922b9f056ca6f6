#pragma once

#include <map>
#include <vector>

#include "chw/treediag/combo.hpp"

namespace chw::tree {

// Rooted planar binary shapes with n leaves; leaves are filled left to right.
std::vector<Planar> rooted_shapes(int n);

// Canonical keys of all nonzero basis trees of degree d whose multiset of
// labels is `content` (sorted, length d+2).
std::vector<Word> content_keys(int genus, const Word& content);

// Sorted label multisets of length n over the genus-g alphabet.
std::vector<Word> contents(int genus, int n);

// Spanning set of T_d(H_Q): all nonzero basis trees, grouped by content.
std::map<Word, std::vector<Word>> spanning_keys(int genus, int d);

// Basis of T_d(H_Q): spanning trees whose eta images are independent, taken
// greedily within each content block.
std::vector<Word> basis_keys(int genus, int d);

struct EtaRank {
  std::size_t spanning = 0;
  std::size_t rank = 0;
};
// Rank of eta on T_d, computed block by block over label contents.
EtaRank eta_rank(int genus, int d);

struct Tr3Rank {
  std::size_t dim_t3 = 0;
  std::size_t image_rank = 0;
  std::size_t kernel_dim() const { return dim_t3 - image_rank; }
};
Tr3Rank tr3_rank(int genus, Tr3Variant variant = Tr3Variant::TraceOracle);

}  // namespace chw::tree
