#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factbound/fieldmatrix.hpp"

namespace factbound {

// Generic-position sampling failed within its resample budget.
struct sampling_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exponent vector of one monomial; entries sum to the ambient degree.
struct Monomial {
  std::vector<long> exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// All degree-d monomials in n+1 variables in the canonical order
/// (lexicographically descending exponent vectors); length binomial(d+n, n).
std::vector<Monomial> monomials(long d, long n);

/// Representative coordinates of a projective point: residues below both
/// configured primes, not all zero.
struct ProjectivePoint {
  std::vector<std::uint32_t> coords;
};

/// The subspace-family constants: base forms are the coordinate forms
/// l_0 = x_0, ..., l_r = x_r, and lambda is the r x d matrix with
/// lambda[i][0] = 0 and pairwise-distinct entries within each row.
struct SubspaceFamily {
  long r = 0;
  long d = 0;
  std::vector<std::vector<std::uint32_t>> lambda;
};

/// Linear conditions on the coefficient space of degree-d forms, columns in
/// monomial order, one provenance tag per row.
struct ConditionSystem {
  FieldMatrix matrix;
  std::vector<std::string> provenance;
};

/// The conditions "the given point is singular on {g = 0}": one row per
/// partial derivative of g, evaluated at the point. The vanishing of g itself
/// follows from the derivative rows (Euler relation; the primes exceed every
/// degree in use), so exactly N+1 rows per point.
ConditionSystem singular_point_rows(const ProjectivePoint& point, long d,
                                    std::uint32_t prime);

/// Outcome of one rank certification: the formula expectation against the
/// rank computed over both configured primes.
struct OracleResult {
  std::string check_id;
  std::vector<std::pair<std::string, long>> params;
  std::uint64_t seed = 0;
  bool seeded = false;
  std::size_t rows = 0;
  std::size_t cols = 0;
  BigInt expected;
  std::size_t rank_primary = 0;
  std::size_t rank_alternate = 0;
  bool match = false;  // both ranks equal the expectation
};

/// Samples m linearly independent points of P^N and certifies that their
/// joint singularity conditions have rank m(N+1). Requires d >= 3,
/// 1 <= m <= N+1.
OracleResult verify_lemma21(long d, long N, long m, std::uint64_t seed,
                            int max_resamples = 100);

/// Deterministic (no sampling): builds the unit rows for singularity along
/// the coordinate i-plane and certifies rank
/// binomial(d+i, d) + (N-i)*binomial(d+i-1, d-1). Requires d >= 3,
/// 0 <= i <= N-1.
OracleResult verify_prop11(long d, long N, long i);

/// Builds the family Theta(e) over all |e| <= d-3 from seeded lambda
/// constants, samples m independent points on each Theta(e) off Pi (first
/// coordinate nonzero), imposes the N-r+1 singularity conditions of the
/// restriction per point, and certifies rank m(N-r+1)*|Delta|. Requires
/// d >= 3, 1 <= r <= N-1, 1 <= m <= N-r+1.
OracleResult verify_prop22(long d, long N, long r, long m, std::uint64_t seed,
                           int max_resamples = 100);

/// Runs verify_prop22 inside ambient dimension k under both readings of the
/// lower-bound argument: r = l with m = k-l+1 points, and r = l+1 with
/// m = k-l points (the most the sampling lemma allows there; not applicable
/// when l = k-1, where r = l+1 would leave no points off Pi). Reports both
/// achieved ranks alongside the printed bound (k-l+1)*binomial(d+l-2, l+1).
/// Purely investigative.
struct Prop21Report {
  long d = 0;
  long k = 0;
  long l = 0;
  std::uint64_t seed = 0;
  BigInt printed_bound;
  OracleResult reading_r_eq_l;
  std::optional<OracleResult> reading_r_eq_l_plus_1;
};

Prop21Report investigate_prop21(long d, long k, long l, std::uint64_t seed);

}  // namespace factbound
