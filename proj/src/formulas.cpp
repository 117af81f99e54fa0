#include "factbound/formulas.hpp"

#include <algorithm>

namespace factbound {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw domain_error(msg);
}

std::string fmt_pair(const char* name, long v) {
  return std::string(name) + " = " + std::to_string(v);
}

}  // namespace

BigInt tau(long a, long b, long c) {
  require(a >= 1 && b >= 1 && c >= 1,
          "tau: arguments must be positive, got (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + ")");
  const BigInt projection = binomial(a + c, c);
  const BigInt decomposable = BigInt(a) * b + 1;
  return std::max(projection, decomposable);
}

BigInt codim_linear_stratum(const Params& p, long i) {
  require(p.d >= 3, "codim_linear_stratum: requires d >= 3, " + fmt_pair("d", p.d));
  require(i >= 0 && i <= p.N - 1,
          "codim_linear_stratum: requires 0 <= i <= N-1, " + fmt_pair("i", i) +
              ", " + fmt_pair("N", p.N));
  return binomial(p.d + i, p.d) + (p.N - i) * binomial(p.d + i - 1, p.d - 1) -
         BigInt(i + 1) * (p.N - i);
}

BigInt e_q(long d, long i, long q) {
  require(d >= 4, "e_q: requires d >= 4, " + fmt_pair("d", d));
  require(i >= 0, "e_q: requires i >= 0, " + fmt_pair("i", i));
  require(q >= 2 && q <= d / 2,
          "e_q: requires 2 <= q <= floor(d/2), " + fmt_pair("q", q) + ", " +
              fmt_pair("d", d));
  return binomial(d + i + 1, i + 1) - binomial(d - 2 * q + i + 1, i + 1) -
         binomial(q + i + 1, i + 1);
}

EqMinimum lemma11_argmin(long d, long i) {
  require(d >= 4, "lemma11_argmin: requires d >= 4, " + fmt_pair("d", d));
  require(i >= 0, "lemma11_argmin: requires i >= 0, " + fmt_pair("i", i));
  EqMinimum best{2, e_q(d, i, 2)};
  for (long q = 3; q <= d / 2; ++q) {
    BigInt v = e_q(d, i, q);
    if (v < best.e_min) best = {q, std::move(v)};
  }
  return best;
}

BigInt delta_q(long d, long i, long q) {
  require(d >= 4, "delta_q: requires d >= 4, " + fmt_pair("d", d));
  require(i >= 0, "delta_q: requires i >= 0, " + fmt_pair("i", i));
  require(q >= 2 && q <= d - 1,
          "delta_q: requires 2 <= q <= d-1, " + fmt_pair("q", q) + ", " +
              fmt_pair("d", d));
  return binomial(d + i, i + 1) - binomial(d - q + i, i + 1);
}

BigInt codim_prop12i(const Params& p, long i) {
  require(p.d >= 4, "codim_prop12i: requires d >= 4, " + fmt_pair("d", p.d));
  require(i >= 0 && i <= p.N - 1,
          "codim_prop12i: requires 0 <= i <= N-1, " + fmt_pair("i", i) + ", " +
              fmt_pair("N", p.N));
  require(!(p.d == 6 && i == p.N - 1),
          "codim_prop12i: the pair d = 6, i = N-1 is out of domain; use "
          "codim_prop12ii");
  const long d = p.d;
  return binomial(d + i + 1, i + 1) - binomial(d + i - 3, i + 1) -
         binomial(i + 3, i + 1) +
         (p.N - i - 1) * (binomial(d + i, i + 1) - binomial(d + i - 2, i + 1));
}

BigInt codim_prop12ii(long N) {
  require(N >= 2, "codim_prop12ii: requires N >= 2, " + fmt_pair("N", N));
  return binomial(N + 6, 6) - binomial(N + 3, 3) - 1;
}

BigInt codim_prop12iii(const Params& p, long i) {
  require(p.d >= 4, "codim_prop12iii: requires d >= 4, " + fmt_pair("d", p.d));
  require(i >= 0 && i <= p.N - 2,
          "codim_prop12iii: requires 0 <= i <= N-2, " + fmt_pair("i", i) +
              ", " + fmt_pair("N", p.N));
  const long d = p.d, N = p.N;
  BigInt branch1 = binomial(d + i + 1, i + 1) - binomial(i + 3, i + 1) +
                   (N - i - 1) * (binomial(d + i, i + 1) - binomial(d + i - 2, i + 1));
  BigInt branch2 = binomial(d + i + 1, i + 1) +
                   (N - i - 2) * (binomial(d + i, i + 1) - 1);
  return std::min(branch1, branch2);
}

BigInt prop12iii_q_expression(const Params& p, long i, long q) {
  require(p.d >= 4,
          "prop12iii_q_expression: requires d >= 4, " + fmt_pair("d", p.d));
  require(i >= 0 && i <= p.N - 2,
          "prop12iii_q_expression: requires 0 <= i <= N-2, " + fmt_pair("i", i) +
              ", " + fmt_pair("N", p.N));
  require(q >= 2 && q <= p.d - 1,
          "prop12iii_q_expression: requires 2 <= q <= d-1, " + fmt_pair("q", q) +
              ", " + fmt_pair("d", p.d));
  const long d = p.d;
  return binomial(d + i + 1, i + 1) +
         (p.N - i - 1) * (binomial(d + i, i + 1) - binomial(d - q + i, i + 1)) -
         binomial(i + q + 1, i + 1);
}

BigInt prop21_bound(long d, long k, long l) {
  require(d >= 3, "prop21_bound: requires d >= 3, " + fmt_pair("d", d));
  require(l >= 0 && l <= k,
          "prop21_bound: requires 0 <= l <= k, " + fmt_pair("l", l) + ", " +
              fmt_pair("k", k));
  return (k - l + 1) * binomial(d + l - 2, l + 1);
}

BigInt vanishing_bound(long d, long k, long i) {
  require(d >= 2, "vanishing_bound: requires d >= 2, " + fmt_pair("d", d));
  require(k >= 1, "vanishing_bound: requires k >= 1, " + fmt_pair("k", k));
  require(i >= 0, "vanishing_bound: requires i >= 0, " + fmt_pair("i", i));
  const BigInt projection = binomial(d - 1 + i, i);
  const BigInt decomposable = BigInt(d - 1) * k + 1;
  return std::max(projection, decomposable);
}

std::string admissibility_violation(long N, long i, long k, long l) {
  if (i < 1) return "violated 1 <= i (" + fmt_pair("i", i) + ")";
  if (l < i)
    return "violated i <= l (" + fmt_pair("i", i) + ", " + fmt_pair("l", l) + ")";
  if (k < l)
    return "violated l <= k (" + fmt_pair("l", l) + ", " + fmt_pair("k", k) + ")";
  if (k > N)
    return "violated k <= N (" + fmt_pair("k", k) + ", " + fmt_pair("N", N) + ")";
  if (N + i < k + l)
    return "violated N+i >= k+l (" + std::to_string(N + i) + " < " +
           std::to_string(k + l) + ")";
  return {};
}

BoundValue bound_general(const Params& p, long i, long k, long l) {
  require(p.d >= 4, "bound_general: requires d >= 4, " + fmt_pair("d", p.d));
  if (std::string why = admissibility_violation(p.N, i, k, l); !why.empty())
    throw domain_error("bound_general: " + why);
  const long d = p.d;
  const long spare = p.N + i - k - l;  // >= 0 once the triple is admissible
  if (l <= k - 2) {
    return {(k - l + 1) * binomial(d + l - 2, l + 1) + spare * tau(d - 1, k, i),
            "thm1.1"};
  }
  if (l == k - 1) {
    if (d != 6) {
      BigInt bracket =
          binomial(d + k, k) - binomial(d - 4 + k, k) - binomial(k + 2, k);
      return {bracket + spare * tau(d - 1, k, i), "thm1.2i"};
    }
    BigInt bracket = binomial(k + 6, k) - binomial(k + 3, k);
    return {bracket + spare * tau(5, k, i), "thm1.2ii-d6"};
  }
  return {binomial(d + k, k) + spare * tau(d - 1, k, i), "thm1.3"};
}

}  // namespace factbound
