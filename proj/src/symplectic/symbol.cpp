#include "chw/symplectic/symbol.hpp"

#include <cctype>

#include "chw/error.hpp"

namespace chw::sp {

bool valid_symbol(Symbol s, int genus) {
  return s < 2 * kMaxGenus && index_of(s) <= genus;
}

void check_genus(int genus) {
  if (genus < 1 || genus > kMaxGenus)
    throw DomainError("genus " + std::to_string(genus) + " outside 1.." + std::to_string(kMaxGenus));
}

std::string symbol_name(Symbol s) {
  return (is_a(s) ? "a" : "b") + std::to_string(index_of(s));
}

Symbol parse_symbol(const std::string& text, int genus) {
  if (text.size() < 2 || (text[0] != 'a' && text[0] != 'b'))
    throw Error("not a basis symbol: '" + text + "'");
  int idx = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) || idx > 1000)
      throw Error("not a basis symbol: '" + text + "'");
    idx = idx * 10 + (text[i] - '0');
  }
  if (idx < 1 || idx > genus)
    throw GenusMismatch("symbol '" + text + "' not available at genus " + std::to_string(genus));
  return text[0] == 'a' ? sym_a(idx) : sym_b(idx);
}

std::vector<Symbol> alphabet(int genus) {
  std::vector<Symbol> out;
  for (int i = 1; i <= genus; ++i) out.push_back(sym_a(i));
  for (int i = 1; i <= genus; ++i) out.push_back(sym_b(i));
  return out;
}

Word::Word(std::initializer_list<Symbol> init) {
  for (Symbol x : init) push_back(x);
}

void Word::push_back(Symbol x) {
  if (n >= kCapacity) throw DomainError("word longer than " + std::to_string(kCapacity) + " symbols");
  s[n++] = x;
}

void Word::append(const Word& w) {
  for (Symbol x : w) push_back(x);
}

Word Word::slice(std::size_t from, std::size_t len) const {
  Word out;
  for (std::size_t i = from; i < from + len; ++i) out.push_back(s[i]);
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.append(y);
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += symbol_name(w[i]);
  }
  return out;
}

}  // namespace chw::sp
