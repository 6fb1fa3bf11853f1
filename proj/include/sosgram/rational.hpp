#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sosgram {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading '-', decimal digits only).
/// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

/// Nearest-looking rational with denominator at most `max_denominator`,
/// via continued fractions. Only used to bring floating-point results back
/// into exact arithmetic.
Rational rationalize(double value, long max_denominator = 1'000'000'000L);

}  // namespace sosgram
