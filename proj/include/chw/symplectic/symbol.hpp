#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace chw::sp {

// Basis symbol of H = H_1(Sigma_g). a_i is i-1 and b_i is 16+i-1, so the
// numeric order is a_1 < ... < a_g < b_1 < ... < b_g for every genus.
using Symbol = std::uint8_t;

constexpr int kMaxGenus = 16;

constexpr Symbol sym_a(int i) { return static_cast<Symbol>(i - 1); }
constexpr Symbol sym_b(int i) { return static_cast<Symbol>(kMaxGenus + i - 1); }
constexpr bool is_a(Symbol s) { return s < kMaxGenus; }
constexpr int index_of(Symbol s) { return (s % kMaxGenus) + 1; }
constexpr Symbol dual(Symbol s) { return is_a(s) ? s + kMaxGenus : s - kMaxGenus; }

// Intersection pairing: a_i . b_j = delta_ij, b_j . a_i = -delta_ij.
constexpr int pairing(Symbol x, Symbol y) {
  if (index_of(x) != index_of(y) || is_a(x) == is_a(y)) return 0;
  return is_a(x) ? 1 : -1;
}

bool valid_symbol(Symbol s, int genus);
void check_genus(int genus);
std::string symbol_name(Symbol s);
// Parses "a3" / "b12"; throws on malformed input or index > genus.
Symbol parse_symbol(const std::string& text, int genus);
std::vector<Symbol> alphabet(int genus);

// Short word of symbols with value semantics, ordered lexicographically
// (a proper prefix sorts first).
struct Word {
  static constexpr std::size_t kCapacity = 15;
  std::array<Symbol, kCapacity> s{};
  std::uint8_t n = 0;

  Word() = default;
  Word(std::initializer_list<Symbol> init);

  std::size_t size() const { return n; }
  bool empty() const { return n == 0; }
  Symbol& operator[](std::size_t i) { return s[i]; }
  Symbol operator[](std::size_t i) const { return s[i]; }
  const Symbol* begin() const { return s.data(); }
  const Symbol* end() const { return s.data() + n; }
  Symbol* begin() { return s.data(); }
  Symbol* end() { return s.data() + n; }
  void push_back(Symbol x);
  void append(const Word& w);
  Word slice(std::size_t from, std::size_t len) const;

  friend bool operator==(const Word& x, const Word& y) {
    return x.n == y.n && std::equal(x.begin(), x.end(), y.begin());
  }
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
  }
};

Word concat(const Word& x, const Word& y);
std::string to_string(const Word& w);

}  // namespace chw::sp
