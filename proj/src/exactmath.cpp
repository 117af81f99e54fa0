#include "factbound/exactmath.hpp"

namespace factbound {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt simplex_point_count(long r, long a) {
  if (r <= 0)
    throw domain_error("simplex_point_count: r must be >= 1, got " +
                       std::to_string(r));
  if (a < 0)
    throw domain_error("simplex_point_count: a must be >= 0, got " +
                       std::to_string(a));
  return binomial(a + r, r);
}

BigInt factorial(long n) {
  if (n < 0)
    throw domain_error("factorial: n must be >= 0, got " + std::to_string(n));
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational make_rational(const BigInt& a, const BigInt& b) {
  if (b == 0) throw domain_error("make_rational: zero denominator");
  Rational q(a, b);
  q.canonicalize();
  return q;
}

}  // namespace factbound
