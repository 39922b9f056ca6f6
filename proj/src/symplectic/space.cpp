#include "chw/symplectic/space.hpp"

#include <algorithm>

#include "chw/error.hpp"

namespace chw::sp {

std::size_t SpaceDescriptor::width() const {
  std::size_t w = 0;
  for (const auto& f : factors) w += f.width();
  return w;
}

std::size_t SpaceDescriptor::offset(std::size_t slot) const {
  if (slot >= factors.size()) throw SpaceMismatch("factor slot out of range");
  std::size_t w = 0;
  for (std::size_t i = 0; i < slot; ++i) w += factors[i].width();
  return w;
}

std::string SpaceDescriptor::to_string() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " (x) ";
    switch (f.kind) {
      case FactorKind::Tensor: out += "H"; break;
      case FactorKind::Sym: out += "S^" + std::to_string(f.arity) + "H"; break;
      case FactorKind::Wedge:
        out += "L^" + std::to_string(f.arity) +
               (f.inner == 1 ? std::string("H") : "(L^" + std::to_string(f.inner) + "H)");
        break;
    }
  }
  return out.empty() ? "Q" : out;
}

SpaceDescriptor make_space(std::vector<Factor> factors) {
  SpaceDescriptor s;
  for (const auto& f : factors) {
    if (f.arity < 0 || f.inner < 1) throw SpaceMismatch("invalid factor");
    if (f.kind == FactorKind::Tensor) {
      if (f.inner != 1) throw SpaceMismatch("tensor factor must be over H");
      for (int i = 0; i < f.arity; ++i) s.factors.push_back({FactorKind::Tensor, 1, 1});
      continue;
    }
    if (f.kind == FactorKind::Sym && f.inner != 1) throw SpaceMismatch("symmetric factor must be over H");
    s.factors.push_back(f);
  }
  if (s.width() > Word::kCapacity) throw SpaceMismatch("space too wide: " + s.to_string());
  return s;
}

SpaceDescriptor space_h() { return make_space({{FactorKind::Tensor, 1, 1}}); }
SpaceDescriptor space_tensor(int n) { return make_space({{FactorKind::Tensor, n, 1}}); }
SpaceDescriptor space_wedge(int k) { return make_space({{FactorKind::Wedge, k, 1}}); }
SpaceDescriptor space_sym(int k) { return make_space({{FactorKind::Sym, k, 1}}); }
SpaceDescriptor space_wedge_of_wedge(int k, int m) { return make_space({{FactorKind::Wedge, k, m}}); }

SpaceDescriptor tensor_product(const SpaceDescriptor& x, const SpaceDescriptor& y) {
  std::vector<Factor> f = x.factors;
  f.insert(f.end(), y.factors.begin(), y.factors.end());
  return make_space(std::move(f));
}

namespace {

// Sorts w[from, from + len) in blocks of size m; returns the sign of the
// block permutation or 0 if two blocks coincide.
int sort_blocks(Word& w, std::size_t from, std::size_t count, std::size_t m, bool alternating) {
  int sign = 1;
  auto block_less = [&](std::size_t i, std::size_t j) {
    return std::lexicographical_compare(w.begin() + from + i * m, w.begin() + from + (i + 1) * m,
                                        w.begin() + from + j * m, w.begin() + from + (j + 1) * m);
  };
  auto block_equal = [&](std::size_t i, std::size_t j) {
    return std::equal(w.begin() + from + i * m, w.begin() + from + (i + 1) * m, w.begin() + from + j * m);
  };
  for (std::size_t i = 1; i < count; ++i) {
    for (std::size_t j = i; j > 0; --j) {
      if (alternating && block_equal(j - 1, j)) return 0;
      if (!block_less(j, j - 1)) break;
      std::swap_ranges(w.begin() + from + (j - 1) * m, w.begin() + from + j * m, w.begin() + from + j * m);
      if (alternating) sign = -sign;
    }
  }
  if (alternating)
    for (std::size_t i = 1; i < count; ++i)
      if (block_equal(i - 1, i)) return 0;
  return sign;
}

}  // namespace

int normalize(const SpaceDescriptor& space, Word& w) {
  if (w.size() != space.width()) throw SpaceMismatch("word length does not match " + space.to_string());
  int sign = 1;
  std::size_t off = 0;
  for (const auto& f : space.factors) {
    switch (f.kind) {
      case FactorKind::Tensor: break;
      case FactorKind::Sym: sort_blocks(w, off, f.arity, 1, false); break;
      case FactorKind::Wedge:
        if (f.inner > 1)
          for (int b = 0; b < f.arity; ++b) {
            int s = sort_blocks(w, off + b * f.inner, f.inner, 1, true);
            if (s == 0) return 0;
            sign *= s;
          }
        int s = sort_blocks(w, off, f.arity, f.inner, true);
        if (s == 0) return 0;
        sign *= s;
        break;
    }
    off += f.width();
  }
  return sign;
}

}  // namespace chw::sp
