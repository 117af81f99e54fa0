#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace factbound {

using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown when an argument falls outside an operation's documented domain.
// Domain guards are hard errors, never silent clamps: every formula is only
// claimed on its stated domain, and silent extension would mask sweep bugs.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// binomial(n, k) with the vanishing convention: returns 0 whenever k < 0,
/// n < 0 or k > n, so expressions whose upper entry dips below the lower
/// entry stay total.
BigInt binomial(long n, long k);

/// Number of integer points of the simplex {e in Z^r : e_i >= 0, sum e_i <= a};
/// equals binomial(a + r, r). Requires r >= 1, a >= 0.
BigInt simplex_point_count(long r, long a);

/// n! for n >= 0.
BigInt factorial(long n);

/// Exact rational a / b, canonicalized. b != 0.
Rational make_rational(const BigInt& a, const BigInt& b);

}  // namespace factbound
