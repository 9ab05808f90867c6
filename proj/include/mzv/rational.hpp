#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace mzv {

// Exact arbitrary-precision rational, kept in lowest terms with a positive
// denominator by the GMP backend.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "p" or "p/q" with an optional leading sign. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& r);

Rational binomial(unsigned n, unsigned k);

}  // namespace mzv
