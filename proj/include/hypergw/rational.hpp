#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypergw {

/// Exact arbitrary-precision fraction. GMP keeps it reduced with a positive
/// denominator as long as values are built through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Canonical "p/q" form, or "p" when q == 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long k);
Integer binomial(long n, long k);  // 0 outside 0 <= k <= n

}  // namespace hypergw
