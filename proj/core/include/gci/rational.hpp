#pragma once

#include <gmpxx.h>

#include <string>

namespace gci {

/// Arbitrary-precision exact arithmetic. GMP's canonical form matches the
/// artifact invariant: positive denominator, gcd(num, den) = 1.
using Int = mpz_class;
using Rational = mpq_class;

/// Canonicalized fraction from machine integers. Throws on zero denominator.
Rational rational(long num, long den = 1);

/// Parses "p" or "p/q" (optional leading '-'). Returns the canonical form.
Rational parse_rational(const std::string& text);

/// Exact nonnegative integer power.
Rational pow(const Rational& base, unsigned long exponent);

std::string to_string(const Rational& value);
std::string to_string(const Int& value);

}  // namespace gci
