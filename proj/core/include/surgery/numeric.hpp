#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace surgery {

// All arithmetic in this library is exact.  Integers are GMP big integers and
// rationals are GMP rationals kept in lowest terms with positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs_int(const Integer& a) { return a >= 0 ? a : Integer(-a); }

Integer pow_int(const Integer& base, unsigned long exp);

Integer factorial(unsigned long n);

// Builds num/den in canonical form (lowest terms, den > 0).  den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "p/q" or "p".  Rejects "inf" and any other non-fraction token, and
// rejects zero denominators.  Whitespace around the token is ignored.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q" with q > 1.
std::string format_rational(const Rational& value);

// Comma-separated list of slopes, e.g. "5/4,3,-7/2".
std::vector<Rational> parse_rational_list(std::string_view text);

std::string format_rational_list(const std::vector<Rational>& values);

} // namespace surgery
