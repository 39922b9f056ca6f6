#pragma once

#include <utility>
#include <vector>

#include "chw/linalg/sparse.hpp"
#include "chw/symplectic/symbol.hpp"

namespace chw::lie {

using linalg::Rational;
using sp::Symbol;
using sp::Word;

// Element of the tensor algebra T(H) in word coordinates.
using Tensor = linalg::SparseVec<Word>;

bool is_lyndon(const Word& w);

// Lyndon words of length d over a_1..a_g, b_1..b_g, in increasing order.
std::vector<Word> lyndon_basis(int genus, int d);

// (1/d) sum_{e | d} mu(e) (2g)^{d/e}
linalg::Integer witt_dim(int genus, int d);

// w = uv with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

// Tensor expansion of the standard bracketing P_w of a Lyndon word. Its
// smallest word is w itself, with coefficient 1.
const Tensor& lyndon_expansion(const Word& w);

Tensor tensor_mul(const Tensor& x, const Tensor& y);
// xy - yx
Tensor tensor_commutator(const Tensor& x, const Tensor& y);
Tensor tensor_letter(Symbol s, const Rational& c = 1);

}  // namespace chw::lie
