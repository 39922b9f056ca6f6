#include "chw/symplectic/weights.hpp"

#include <sstream>

#include "chw/error.hpp"
#include "chw/symplectic/equivariant.hpp"

namespace chw::sp {

Weight weight_of(const Word& w, int genus) {
  Weight out(genus, 0);
  for (Symbol s : w) {
    if (!valid_symbol(s, genus)) throw GenusMismatch("symbol outside genus");
    out[index_of(s) - 1] += is_a(s) ? 1 : -1;
  }
  return out;
}

IrrepLabel IrrepLabel::parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != ' ') t += ch;
  IrrepLabel out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw Error("bad irreducible label '" + text + "'");
    int v = 0;
    for (char ch : item) {
      if (ch < '0' || ch > '9') throw Error("bad irreducible label '" + text + "'");
      v = v * 10 + (ch - '0');
    }
    out.parts.push_back(v);
  }
  while (!out.parts.empty() && out.parts.back() == 0) out.parts.pop_back();
  for (std::size_t i = 1; i < out.parts.size(); ++i)
    if (out.parts[i] > out.parts[i - 1]) throw Error("label is not a partition: '" + text + "'");
  return out;
}

std::string IrrepLabel::to_string() const {
  if (parts.empty()) return "[0]";
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

std::size_t IrrepLabel::length() const { return parts.size(); }

Weight IrrepLabel::as_weight(int genus) const {
  if (static_cast<int>(parts.size()) > genus) throw DomainError("label too long for genus");
  Weight w(genus, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) w[i] = parts[i];
  return w;
}

HElem raising_image(int genus, int root, Symbol s) {
  if (root < 1 || root > genus) throw DomainError("no simple root " + std::to_string(root));
  HElem out(genus);
  int i = index_of(s);
  if (root < genus) {
    if (is_a(s) && i == root + 1) return HElem::basis(genus, sym_a(root));
    if (!is_a(s) && i == root) return HElem::basis(genus, sym_b(root + 1), -1);
  } else if (!is_a(s) && i == genus) {
    return HElem::basis(genus, sym_a(genus));
  }
  return out;
}

MultiElem raise(const MultiElem& x, int root) {
  return apply_derivation(x, [&](Symbol s) { return raising_image(x.genus(), root, s); });
}

bool is_weight_vector(const MultiElem& x, const Weight& w) {
  for (const auto& [word, c] : x.terms())
    if (weight_of(word, x.genus()) != w) return false;
  return true;
}

bool is_highest_weight(const MultiElem& x, const IrrepLabel& label) {
  if (x.is_zero() || static_cast<int>(label.length()) > x.genus()) return false;
  if (!is_weight_vector(x, label.as_weight(x.genus()))) return false;
  for (int r = 1; r <= x.genus(); ++r)
    if (!raise(x, r).is_zero()) return false;
  return true;
}

linalg::Integer weyl_dim(const IrrepLabel& label, int genus) {
  check_genus(genus);
  if (static_cast<int>(label.length()) > genus) return 0;
  std::vector<long> l(genus), rho(genus);
  for (int i = 0; i < genus; ++i) {
    rho[i] = genus - i;
    l[i] = rho[i] + (i < static_cast<int>(label.length()) ? label.parts[i] : 0);
  }
  linalg::Rational d = 1;
  for (int i = 0; i < genus; ++i) {
    d *= l[i];
    d /= rho[i];
    for (int j = i + 1; j < genus; ++j) {
      d *= (l[i] - l[j]) * (l[i] + l[j]);
      d /= (rho[i] - rho[j]) * (rho[i] + rho[j]);
    }
  }
  if (d.get_den() != 1) throw Error("Weyl dimension not integral");
  return d.get_num();
}

}  // namespace chw::sp
