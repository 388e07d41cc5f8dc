#pragma once

#include <gmpxx.h>

#include <string>

namespace lipclass {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Exact integer power; exponent must be non-negative.
Rational pow(const Rational& base, unsigned long exponent);

// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

// Parses "p/q", an integer, or a finite decimal such as "-1.25" exactly.
// Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

long double to_long_double(const Rational& q);

}  // namespace lipclass
