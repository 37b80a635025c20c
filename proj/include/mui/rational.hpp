#pragma once

#include <gmpxx.h>

#include <string>

namespace mui {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (lowest terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Parses decimal integer strings; throws std::invalid_argument on bad input
// or a zero denominator.
Rational make_rational(const std::string& num, const std::string& den);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

Rational floor(const Rational& q);

// q - floor(q), in [0, 1).
Rational frac(const Rational& q);

Rational abs(const Rational& q);

}  // namespace mui
