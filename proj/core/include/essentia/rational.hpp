#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace essentia {

/// Exact arbitrary-precision rational. All LP values and thresholds use it.
using Rational = mpq_class;

// GMP's two-argument constructor does not reduce; comparisons assume reduced.
Rational make_rational(long num, long den);

/// Always "p/q", including integers ("3/1").
std::string to_string(const Rational& r);

/// Accepts "p/q", "p", or a finite decimal such as "3.5".
/// Throws InvalidInput on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace essentia
