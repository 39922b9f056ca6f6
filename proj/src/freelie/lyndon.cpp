#include "chw/freelie/lyndon.hpp"

#include <map>
#include <mutex>

#include "chw/error.hpp"

namespace chw::lie {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  // strictly smaller than every proper rotation
  for (std::size_t k = 1; k < w.size(); ++k) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      Symbol x = w[i], y = w[(i + k) % w.size()];
      if (x < y) goto next;
      if (x > y) return false;
    }
    return false;
  next:;
  }
  return true;
}

std::vector<Word> lyndon_basis(int genus, int d) {
  sp::check_genus(genus);
  if (d < 1) throw DomainError("Lyndon degree must be positive");
  const auto alpha = sp::alphabet(genus);
  const int n = static_cast<int>(alpha.size());
  std::vector<Word> out;
  // Duval's generation in lexicographic order over indices 0..n-1
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == d) {
      Word x;
      for (int i : w) x.push_back(alpha[i]);
      out.push_back(x);
    }
    std::size_t m = w.size();
    while (static_cast<int>(w.size()) < d) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n - 1) w.pop_back();
  }
  return out;
}

linalg::Integer witt_dim(int genus, int d) {
  if (d < 1) throw DomainError("degree must be positive");
  auto mobius = [](int e) {
    int mu = 1;
    for (int p = 2; p * p <= e; ++p)
      if (e % p == 0) {
        e /= p;
        if (e % p == 0) return 0;
        mu = -mu;
      }
    if (e > 1) mu = -mu;
    return mu;
  };
  linalg::Integer sum = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) {
      linalg::Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2 * genus, d / e);
      sum += mobius(e) * p;
    }
  return sum / d;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2 || !is_lyndon(w)) throw DomainError("standard factorization needs a Lyndon word of length >= 2");
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word v = w.slice(k, w.size() - k);
    if (is_lyndon(v)) return {w.slice(0, k), v};
  }
  throw DomainError("no Lyndon suffix");
}

Tensor tensor_letter(Symbol s, const Rational& c) {
  Tensor t;
  linalg::add_term(t, Word{s}, c);
  return t;
}

Tensor tensor_mul(const Tensor& x, const Tensor& y) {
  Tensor out;
  for (const auto& [u, c] : x)
    for (const auto& [v, d] : y) linalg::add_term(out, sp::concat(u, v), c * d);
  return out;
}

Tensor tensor_commutator(const Tensor& x, const Tensor& y) {
  Tensor out;
  for (const auto& [u, c] : x)
    for (const auto& [v, d] : y) {
      Rational cd = c * d;
      linalg::add_term(out, sp::concat(u, v), cd);
      linalg::add_term(out, sp::concat(v, u), -cd);
    }
  return out;
}

const Tensor& lyndon_expansion(const Word& w) {
  static std::mutex mu;
  static std::map<Word, Tensor> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  Tensor t;
  if (w.size() == 1) {
    t = tensor_letter(w[0]);
  } else {
    auto [u, v] = standard_factorization(w);
    t = tensor_commutator(lyndon_expansion(u), lyndon_expansion(v));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(w, std::move(t)).first->second;
}

}  // namespace chw::lie
