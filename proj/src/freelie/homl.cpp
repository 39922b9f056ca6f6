#include "chw/freelie/homl.hpp"

#include <algorithm>
#include <map>

#include "chw/error.hpp"

namespace chw::lie {

HomLElem& HomLElem::operator+=(const HomLElem& y) {
  sp::require_same_genus(genus, y.genus);
  linalg::axpy(coeffs, Rational(1), y.coeffs);
  return *this;
}

HomLElem& HomLElem::operator-=(const HomLElem& y) {
  sp::require_same_genus(genus, y.genus);
  linalg::axpy(coeffs, Rational(-1), y.coeffs);
  return *this;
}

HomLElem& HomLElem::operator*=(const Rational& c) {
  coeffs = linalg::scaled(coeffs, c);
  return *this;
}

Tensor to_tensor(const HomLElem& x) {
  Tensor t;
  for (const auto& [key, c] : x.coeffs) {
    Word tag{key[0]};
    for (const auto& [w, d] : lyndon_expansion(key.slice(1, key.size() - 1)))
      linalg::add_term(t, sp::concat(tag, w), c * d);
  }
  return t;
}

HomLElem homl_from_tensor(int genus, const Tensor& t) {
  std::map<Symbol, Tensor> parts;
  for (const auto& [w, c] : t) {
    if (w.size() < 2) throw DomainError("tensor too short for H (x) L");
    parts[w[0]].emplace(w.slice(1, w.size() - 1), c);
  }
  HomLElem out(genus);
  for (auto& [tag, part] : parts) {
    LieElem l = from_tensor(genus, std::move(part));
    for (const auto& [w, c] : l.coeffs) out.coeffs.emplace(sp::concat(Word{tag}, w), c);
  }
  return out;
}

namespace {

linalg::SparseVec<Word> bracket_column(int genus, const Word& key) {
  Tensor u = tensor_letter(key[0]);
  return from_tensor(genus, tensor_commutator(u, lyndon_expansion(key.slice(1, key.size() - 1)))).coeffs;
}

std::vector<Word> domain_keys(int genus, int i) {
  std::vector<Word> out;
  auto lyn = lyndon_basis(genus, i + 1);
  for (Symbol u : sp::alphabet(genus))
    for (const auto& w : lyn) out.push_back(sp::concat(Word{u}, w));
  return out;
}

Word content(Word w) {
  std::sort(w.begin(), w.end());
  return w;
}

std::map<Word, std::vector<Word>> domain_blocks(int genus, int i) {
  std::map<Word, std::vector<Word>> blocks;
  for (const auto& key : domain_keys(genus, i)) blocks[content(key)].push_back(key);
  return blocks;
}

}  // namespace

BracketMap bracket_map(int genus, int i) {
  if (i < 0) throw DomainError("negative degree");
  BracketMap m{domain_keys(genus, i), lyndon_basis(genus, i + 2), linalg::RatMatrix(0, 0)};
  std::map<Word, std::size_t> row;
  for (std::size_t r = 0; r < m.codomain.size(); ++r) row[m.codomain[r]] = r;
  m.matrix = linalg::RatMatrix(m.codomain.size(), m.domain.size());
  for (std::size_t c = 0; c < m.domain.size(); ++c)
    for (const auto& [w, v] : bracket_column(genus, m.domain[c])) m.matrix.set(row.at(w), c, v);
  return m;
}

std::size_t bracket_rank(int genus, int i) {
  std::size_t total = 0;
  for (const auto& [cont, keys] : domain_blocks(genus, i)) {
    linalg::Echelon<Word> e;
    for (const auto& key : keys) e.insert(bracket_column(genus, key));
    total += e.rank();
  }
  return total;
}

std::vector<HomLElem> h_kernel_basis(int genus, int i) {
  std::vector<HomLElem> out;
  for (const auto& [cont, keys] : domain_blocks(genus, i)) {
    linalg::TrackedEchelon<Word> e;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      auto [independent, relation] = e.insert(bracket_column(genus, keys[k]), k);
      if (independent) continue;
      HomLElem x(genus);
      for (const auto& [idx, c] : relation) x.coeffs.emplace(keys[idx], c);
      out.push_back(std::move(x));
    }
  }
  return out;
}

linalg::Integer h_dim(int genus, int i) {
  return 2 * genus * witt_dim(genus, i + 1) - witt_dim(genus, i + 2);
}

Tensor apply_derivation(const Derivation& d, const Tensor& t) {
  Tensor out;
  for (const auto& [w, c] : t)
    for (std::size_t p = 0; p < w.size(); ++p) {
      const Tensor& img = d(w[p]);
      for (const auto& [v, e] : img) {
        Word x = w.slice(0, p);
        x.append(v);
        x.append(w.slice(p + 1, w.size() - p - 1));
        linalg::add_term(out, x, c * e);
      }
    }
  return out;
}

std::vector<Tensor> derivation_images(const HomLElem& f) {
  std::vector<Tensor> images(2 * sp::kMaxGenus);
  for (const auto& [key, c] : f.coeffs) {
    Symbol u = key[0];
    Symbol x = sp::dual(u);  // (x . u) != 0 only for x dual to u
    Rational p = sp::pairing(x, u);
    for (const auto& [w, d] : lyndon_expansion(key.slice(1, key.size() - 1)))
      linalg::add_term(images[x], w, p * c * d);
  }
  return images;
}

Tensor reconstruct(int genus, const std::vector<Tensor>& images) {
  Tensor out;
  for (int i = 1; i <= genus; ++i) {
    for (const auto& [w, c] : images[sp::sym_a(i)]) linalg::add_term(out, sp::concat(Word{sp::sym_b(i)}, w), c);
    for (const auto& [w, c] : images[sp::sym_b(i)]) linalg::add_term(out, sp::concat(Word{sp::sym_a(i)}, w), -c);
  }
  return out;
}

HomLElem derivation_bracket(const HomLElem& f, const HomLElem& h) {
  sp::require_same_genus(f.genus, h.genus);
  const auto df = derivation_images(f);
  const auto dh = derivation_images(h);
  Derivation Df = [&](Symbol s) -> const Tensor& { return df[s]; };
  Derivation Dh = [&](Symbol s) -> const Tensor& { return dh[s]; };
  std::vector<Tensor> images(2 * sp::kMaxGenus);
  for (Symbol x : sp::alphabet(f.genus)) {
    Tensor t = apply_derivation(Dh, df[x]);
    linalg::axpy(t, Rational(-1), apply_derivation(Df, dh[x]));
    images[x] = std::move(t);
  }
  return homl_from_tensor(f.genus, reconstruct(f.genus, images));
}

std::string to_sexpr(const HomLElem& x) {
  if (x.is_zero()) return "0";
  std::vector<std::string> parts;
  for (const auto& [key, c] : x.coeffs) {
    std::string t = "(tensor " + sp::symbol_name(key[0]) + " " + bracket_sexpr(key.slice(1, key.size() - 1)) + ")";
    parts.push_back(c == 1 ? t : "(* " + c.get_str() + " " + t + ")");
  }
  if (parts.size() == 1) return parts[0];
  std::string s = "(+";
  for (const auto& p : parts) s += " " + p;
  return s + ")";
}

}  // namespace chw::lie
