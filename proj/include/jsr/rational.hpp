#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jsr {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" exactly. Decimal points and exponents are
/// rejected; there is no floating-point path into the library.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Natural logarithm of a positive rational without overflowing double.
double log_of(const Rational& q);

/// Nearest double, saturating to +-inf for out-of-range magnitudes.
double to_double(const Rational& q);

/// Least common multiple of the denominators of `values`.
Integer denominator_lcm(const Rational* first, const Rational* last);

}  // namespace jsr
