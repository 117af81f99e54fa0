#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factbound/formulas.hpp"

namespace factbound {

/// Names a stratum by component dimension i, span dimension k, and the
/// dimension l of the singular locus of the restriction to the span.
struct StratumKey {
  long i = 0;
  long k = 0;
  long l = 0;
};

struct Admissibility {
  bool ok = false;
  std::string reason;  // names the violated constraint when !ok
  explicit operator bool() const { return ok; }
};

/// True iff 1 <= i <= l <= k <= N and N+i >= k+l.
Admissibility is_admissible(long N, const StratumKey& s);

/// One of the eight codimension-three strata (component dimension i = N-4).
/// The k = N-3 entry is the composite hypersurface-in-a-plane case and has no
/// single l (it covers l = N-4 and l = N-3); its l is absent.
struct Codim3Stratum {
  long k = 0;
  std::optional<long> l;
};

/// The eight strata with i = N-4, in fixed order:
///   (N-4,N-4), (N-3,*), (N-2,N-4), (N-2,N-3), (N-2,N-2),
///   (N-1,N-4), (N-1,N-3), (N,N-4).
/// After expanding the composite entry to l in {N-4, N-3}, this is exactly
/// the set of admissible (k,l) at i = N-4. Requires N >= 7.
std::vector<Codim3Stratum> enumerate_codim3_strata(long N);

/// The eight printed codimension lower bounds (alpha_1..alpha_8, with the
/// alpha_2 split and the d = 6 substitute for alpha_4), their minimum and its
/// argmin. Identifiers: a1, a2, a2a, a2b, a3, a4, a4prime, a5, a6, a7, a8.
struct AlphaBreakdown {
  long d = 0;
  long N = 0;
  bool d6_mode = false;  // alpha'_4 replaces alpha_4 in the minimum
  std::map<std::string, BigInt> alpha;
  BigInt min_value;
  std::string argmin;  // earliest of a1,a2,...,a8 on ties
};

/// Evaluates every printed alpha formula exactly. Requires N >= 7, d >= 4.
AlphaBreakdown alphas(const Params& p);

/// min over {a1, a2, a3, a4 (a4prime when d = 6), a5, a6, a7, a8}.
BigInt theorem31_bound(const Params& p);

/// The regime-dependent headline bound:
///   4 <= d < N : min{ 3*binomial(d+N-5, N-2) - N, 5*binomial(d+N-6, N-3) },
///                tagged "fano"
///   d == N     : 5*binomial(d+N-6, N-3), tagged "fano-index-one"
///   N < d < 2N : theorem31_bound, tagged "intermediate"
///   d >= 2N    : binomial(d+N-4, N-4) + 4*binomial(d+N-5, N-4) - 4(N-3),
///                tagged "general-type"
BoundValue theorem01_bound(const Params& p);

/// Writing N = 3m + e with e in {0,1,2}, returns 2m + e + 1: the degree at
/// which the a7/a8 minimum switches. Requires N >= 7.
long dstar(long N);

/// Printed alpha value vs the value recomposed from the general bounds (the
/// per-plane bound minus the plane-family dimension). Differences are data,
/// never errors.
struct ConsistencyEntry {
  std::string alpha_id;  // a1, a2a, a2b, a3, a4 (or a4prime), a5, a6, a7, a8
  BigInt printed;
  BigInt composed;
  BigInt difference;  // printed - composed
};

struct ConsistencyReport {
  long d = 0;
  long N = 0;
  bool d6_mode = false;
  std::vector<ConsistencyEntry> entries;
};

ConsistencyReport composition_consistency(const Params& p);

}  // namespace factbound
