#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chw/freelie/lie.hpp"
#include "chw/linalg/matrix.hpp"

namespace chw::lie {

// Element of H (x) L_{g,1} in coordinates (h, w): h a basis symbol, w a
// Lyndon word; the key is the word h w.
struct HomLElem {
  int genus = 1;
  linalg::SparseVec<Word> coeffs;

  HomLElem() = default;
  explicit HomLElem(int g) : genus(g) { sp::check_genus(g); }

  bool is_zero() const { return coeffs.empty(); }
  HomLElem& operator+=(const HomLElem& y);
  HomLElem& operator-=(const HomLElem& y);
  HomLElem& operator*=(const Rational& c);
  friend HomLElem operator+(HomLElem x, const HomLElem& y) { return x += y; }
  friend HomLElem operator-(HomLElem x, const HomLElem& y) { return x -= y; }
  friend HomLElem operator*(const Rational& c, HomLElem x) { return x *= c; }
  friend bool operator==(const HomLElem& x, const HomLElem& y) {
    return x.genus == y.genus && x.coeffs == y.coeffs;
  }
};

// h (x) P_w written as the word h followed by the expansion of P_w.
Tensor to_tensor(const HomLElem& x);
HomLElem homl_from_tensor(int genus, const Tensor& t);

// u (x) X -> [u, X] from H (x) L[i+1] to L[i+2], columns indexed by
// (u, Lyndon word) in increasing key order.
struct BracketMap {
  std::vector<Word> domain;  // keys u w
  std::vector<Word> codomain;
  linalg::RatMatrix matrix;
};
BracketMap bracket_map(int genus, int i);

// Rank of the bracket map, computed block by block over letter content.
std::size_t bracket_rank(int genus, int i);

// Basis of h(i) = Ker(H (x) L[i+1] -> L[i+2]).
std::vector<HomLElem> h_kernel_basis(int genus, int i);
linalg::Integer h_dim(int genus, int i);

// Derivation of the tensor algebra determined by generator images.
using Derivation = std::function<const Tensor&(Symbol)>;
Tensor apply_derivation(const Derivation& d, const Tensor& t);

// Generator images x -> sum_u (x . u) X_u of f = sum_u u (x) X_u.
std::vector<Tensor> derivation_images(const HomLElem& f);

// Inverse of f -> D_f: D -> sum_i b_i (x) D(a_i) - a_i (x) D(b_i).
Tensor reconstruct(int genus, const std::vector<Tensor>& images);

// R(D_h o D_f - D_f o D_h); with this order eta is a Lie homomorphism.
HomLElem derivation_bracket(const HomLElem& f, const HomLElem& h);

std::string to_sexpr(const HomLElem& x);

}  // namespace chw::lie
