#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sobczyk {

/// Exact rational number. Every quantity in the library (weights, norms,
/// bounds, coordinates on the unit interval) is carried as a Rational.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when q = 1).
std::string to_string(const Rational& value);

/// Approximate decimal rendering for human-facing columns only.
std::string to_decimal(const Rational& value, int digits = 6);

inline Rational abs(const Rational& value) { return Rational(::abs(value)); }

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace sobczyk
