#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace plaincharts {

/// Exact arbitrary-precision rational number. mpq_class keeps values
/// canonical: lowest terms, positive denominator, zero stored as 0/1.
using Rational = mpq_class;

/// Parses "a" or "a/b" with optional leading sign. Throws ParseError on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical form: "a" for integers, "a/b" otherwise, b > 0.
std::string rational_to_string(const Rational& q);

using RationalPoint = std::vector<Rational>;

} // namespace plaincharts
