#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fpbl {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "a/b", an integer, or a finite decimal ("0.5", "2.25", "1e-3")
/// into an exact canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "num/den" for non-integers, "num" for integers.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Natural logarithm of |z| for arbitrarily large z (uses the bit length
/// plus a 53-bit mantissa, so it never overflows). z must be nonzero.
double log_abs(const BigInt& z);
double log_abs(const Rational& r);

/// Closest double; may underflow to 0 or overflow to inf for extreme values.
inline double to_double(const Rational& r) { return r.get_d(); }

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

/// b^e for small exponents.
BigInt pow(const BigInt& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

/// Strict three-way comparison against an integer, used for exact regime
/// tests (e.g. q <=> 3).
int compare(const Rational& r, long value);

}  // namespace fpbl
