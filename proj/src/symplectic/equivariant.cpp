#include "chw/symplectic/equivariant.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "chw/error.hpp"

namespace chw::sp {

namespace {

SpaceDescriptor replace_factors(const SpaceDescriptor& s, std::size_t slot, std::size_t count,
                                const std::vector<Factor>& with) {
  std::vector<Factor> f(s.factors.begin(), s.factors.begin() + slot);
  f.insert(f.end(), with.begin(), with.end());
  f.insert(f.end(), s.factors.begin() + slot + count, s.factors.end());
  return make_space(std::move(f));
}

const Factor& factor_at(const MultiElem& x, std::size_t slot) {
  if (slot >= x.space().factors.size())
    throw SpaceMismatch("no factor " + std::to_string(slot) + " in " + x.space().to_string());
  return x.space().factors[slot];
}

bool is_plain_wedge(const Factor& f) {
  return (f.kind == FactorKind::Wedge && f.inner == 1) || (f.kind == FactorKind::Tensor);
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

}  // namespace

MultiElem contraction(const MultiElem& x, std::size_t slot) {
  const Factor& f = factor_at(x, slot);
  if (f.kind != FactorKind::Wedge || f.inner != 1 || f.arity < 2)
    throw SpaceMismatch("contraction needs Wedge^k H with k >= 2, got " + x.space().to_string());
  const int k = f.arity;
  const std::size_t off = x.space().offset(slot);
  MultiElem out(x.genus(), replace_factors(x.space(), slot, 1, {{FactorKind::Wedge, k - 2, 1}}));
  for (const auto& [w, c] : x.terms()) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        int p = pairing(w[off + i], w[off + j]);
        if (p == 0) continue;
        // 1-based exponent i+j+1 becomes (i+1)+(j+1)+1
        int sign = ((i + j + 3) % 2 == 0) ? 1 : -1;
        Word v;
        for (std::size_t t = 0; t < w.size(); ++t)
          if (t != off + i && t != off + j) v.push_back(w[t]);
        out.add_word(v, c * (sign * p));
      }
  }
  return out;
}

MultiElem canonical_inclusion(const MultiElem& x, std::size_t slot) {
  const Factor& f = factor_at(x, slot);
  if (f.kind != FactorKind::Wedge) throw SpaceMismatch("canonical inclusion needs an exterior power");
  const int k = f.arity, m = f.inner;
  Factor part = m == 1 ? Factor{FactorKind::Tensor, 1, 1} : Factor{FactorKind::Wedge, m, 1};
  std::vector<Factor> parts(k, part);
  const std::size_t off = x.space().offset(slot);
  MultiElem out(x.genus(), replace_factors(x.space(), slot, 1, parts));
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> perms;
  do perms.emplace_back(perm, permutation_sign(perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& [w, c] : x.terms())
    for (const auto& [p, sign] : perms) {
      Word v = w;
      for (int b = 0; b < k; ++b)
        for (int t = 0; t < m; ++t) v[off + b * m + t] = w[off + p[b] * m + t];
      out.add_word(v, sign * c);
    }
  return out;
}

MultiElem multiply(const MultiElem& x, std::size_t slot) {
  const Factor& f1 = factor_at(x, slot);
  const Factor& f2 = factor_at(x, slot + 1);
  if (!is_plain_wedge(f1) || !is_plain_wedge(f2))
    throw SpaceMismatch("multiplication needs Wedge^m H (x) Wedge^n H, got " + x.space().to_string());
  MultiElem out(x.genus(), replace_factors(x.space(), slot, 2, {{FactorKind::Wedge, f1.arity + f2.arity, 1}}));
  for (const auto& [w, c] : x.terms()) out.add_word(w, c);
  return out;
}

MultiElem jacobi(const MultiElem& x, std::size_t slot) {
  const Factor& f = factor_at(x, slot);
  if (f.kind != FactorKind::Wedge || f.inner != 1 || f.arity != 3)
    throw SpaceMismatch("Jacobi map needs Wedge^3 H, got " + x.space().to_string());
  const std::size_t off = x.space().offset(slot);
  MultiElem out(x.genus(),
                replace_factors(x.space(), slot, 1, {{FactorKind::Tensor, 1, 1}, {FactorKind::Wedge, 2, 1}}));
  static const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& [w, c] : x.terms())
    for (const auto& r : cyc) {
      Word v = w;
      for (int t = 0; t < 3; ++t) v[off + t] = w[off + r[t]];
      out.add_word(v, c);
    }
  return out;
}

MultiElem partial_contract5(const MultiElem& x) {
  if (!(x.space() == space_tensor(5))) throw SpaceMismatch("partial contraction needs H^(x)5");
  MultiElem out(x.genus(), make_space({{FactorKind::Wedge, 2, 1}, {FactorKind::Tensor, 1, 1}}));
  for (const auto& [w, c] : x.terms()) {
    int p = pairing(w[0], w[1]);
    if (p != 0) out.add_word(Word{w[2], w[3], w[4]}, c * p);
  }
  return out;
}

MultiElem apply_derivation(const MultiElem& x, const std::function<HElem(Symbol)>& image) {
  std::map<Symbol, HElem> images, ids;
  auto img = [&](Symbol s) -> const HElem* {
    auto it = images.find(s);
    if (it == images.end()) it = images.emplace(s, image(s)).first;
    return &it->second;
  };
  auto id = [&](Symbol s) -> const HElem* {
    auto it = ids.find(s);
    if (it == ids.end()) it = ids.emplace(s, HElem::basis(x.genus(), s)).first;
    return &it->second;
  };
  MultiElem out(x.genus(), x.space());
  for (const auto& [w, c] : x.terms())
    for (std::size_t p = 0; p < w.size(); ++p) {
      const HElem* d = img(w[p]);
      if (d->is_zero()) continue;
      std::vector<const HElem*> letters;
      for (std::size_t t = 0; t < w.size(); ++t) letters.push_back(t == p ? d : id(w[t]));
      expand_letters(letters, c, out);
    }
  return out;
}

}  // namespace chw::sp
