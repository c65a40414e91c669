#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sasaki {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact serialization as "p/q" (q is always present, q > 0, lowest terms).
std::string to_exact_string(const Rational& x);

/// Parses "p/q", a plain integer, or a decimal literal such as "0.685" or
/// "1e-9". Decimal literals are converted exactly (no binary rounding).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders x rounded to `significant` significant digits, half away from
/// zero, with trailing zeros removed. Switches to d.ddde[+-]XX form for very
/// large or very small magnitudes.
std::string to_decimal(const Rational& x, int significant);

int sign(const Rational& x);

/// 10^k as an exact rational, k may be negative.
Rational pow10(long k);

}  // namespace sasaki
