#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace parkhopf {

/// Exact arbitrary-precision rational; every coefficient in the library is one.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// num/den in lowest terms.
inline Rational fraction(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);
Integer factorial(long n);
Integer ipow(long base, unsigned long exponent);

}  // namespace parkhopf
