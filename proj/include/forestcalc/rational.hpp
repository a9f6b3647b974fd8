#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace forestcalc {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Values are always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (whitespace around the value is ignored).
Rational parse_rational(std::string_view text);

/// Renders as "p/q" with q > 0 and gcd(p, q) = 1; integers render as "p/1".
std::string to_string(const Rational& value);

/// Renders integers without the "/1" suffix; used for human-facing output.
std::string to_short_string(const Rational& value);

Rational factorial(unsigned n);

}  // namespace forestcalc
