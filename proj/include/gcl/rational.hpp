#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace gcl {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "a/b", "a", or a decimal string ("0.25") into an exact rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical "num/den" form ("num" when the denominator is 1).
std::string rational_string(const Rational& r);

/// b^e for integer e (e may be negative; b must be nonzero then).
Rational rational_pow(const Rational& base, long exponent);

BigInt bigint_pow(unsigned long base, unsigned long exponent);

/// Floor / ceiling of a rational as a big integer.
BigInt rational_floor(const Rational& r);
BigInt rational_ceil(const Rational& r);

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// True when r equals 3^t for some integer t; sets t accordingly.
bool is_power_of_three(const Rational& r, long& t);

std::vector<Rational> parse_rational_list(const std::string& text, char sep = ',');

}  // namespace gcl
