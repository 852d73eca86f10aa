#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tropbundle {

/// Exact rational scalar. Values produced by this library are kept in
/// canonical form (reduced, positive denominator).
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
/// Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. mpq_class(num, den) leaves the fraction
/// unreduced, which breaks equality and integer tests.
Rational ratio(long num, long den);

/// Canonical "p/q" rendering; integers render as "p".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Converts an integral rational to int64. Throws std::domain_error when the
/// value is not an integer or does not fit.
std::int64_t to_int64(const Rational& q);

Rational floor_div(const Rational& a, const Rational& b);

/// Representative of a modulo m in [0, m). Requires m > 0.
Rational mod_positive(const Rational& a, const Rational& m);

}  // namespace tropbundle
