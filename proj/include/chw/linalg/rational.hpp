#pragma once

#include <gmpxx.h>

#include <string>

namespace chw::linalg {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace chw::linalg
