#pragma once

#include <map>
#include <string>
#include <vector>

#include "factbound/strata.hpp"

namespace factbound {

/// One failed check: the parameter tuple, the expected relation, and the
/// values actually observed.
struct SweepFailure {
  std::vector<long> tuple;
  std::string relation;
  std::map<std::string, std::string> actual;
};

/// A non-gating observation kept with full data (known exceptions, recorded
/// argmins, and similar).
struct SweepRecord {
  std::vector<long> tuple;
  std::map<std::string, std::string> values;
};

/// Deterministic result of sweeping one claim over a parameter range.
/// total == passes + failures.size(); `recorded` never gates.
struct SweepReport {
  std::string claim_id;
  std::string range;
  std::vector<std::string> tuple_names;
  long total = 0;
  long passes = 0;
  std::vector<SweepFailure> failures;
  std::vector<SweepRecord> recorded;
  bool report_only = false;

  bool passed() const { return failures.empty(); }
};

/// Exact two-sided evaluation of a printed closed-form identity. lhs is the
/// direct difference of alpha values (always an integer); rhs is the printed
/// closed form, which need not be integral, so both sides are exact
/// rationals.
struct IdentityReport {
  std::string claim_id;
  std::vector<std::pair<std::string, long>> params;
  Rational lhs;
  Rational rhs;
  bool equal = false;
  bool lhs_positive = false;
};

/// argmin_q e_q == 2 for every d != 6 in [4, d_max] and every i in [0, i_max];
/// for d = 6 the argmin is 3 from i = 2 on (the i = 0, 1 rows, where the
/// minimum sits at q = 2 instead, are recorded, not asserted). Also checks
/// E_3 > E_2 for every d >= 7. Requires d_max >= 7, i_max >= 1.
SweepReport sweep_lemma11(long d_max = 60, long i_max = 12, int jobs = 1);

/// min over q in [2, d-1] of prop12iii_q_expression equals the smaller of its
/// two end values, for 4 <= d <= d_max, 2 <= N <= N_max, 0 <= i <= N-2.
/// Requires d_max >= 5.
SweepReport sweep_prop12iii_endpoints(long d_max = 30, long N_max = 12,
                                      int jobs = 1);

/// tau(d-1, k, N-4) == binomial(d+N-5, N-4) for 7 <= N <= N_max,
/// 4 <= d <= d_max, N-4 <= k <= N-1; the k = N tuples where the equality
/// fails are recorded separately and never gate.
SweepReport sweep_tau_simplification(long d_max = 30, long N_max = 14,
                                     int jobs = 1);

/// Every alpha_1..alpha_6 (alpha'_4 at d = 6) is >= min(alpha_7, alpha_8) for
/// 7 <= N <= N_max, 4 <= d <= N, and the argmin at d = N is a8.
SweepReport sweep_fano_dominance(long N_max = 16, int jobs = 1);

/// Every other alpha is >= alpha_1 at d = 2N + a, for 7 <= N <= N_max,
/// 0 <= a <= a_max.
SweepReport sweep_gt_dominance(long N_max = 12, long a_max = 20, int jobs = 1);

/// alpha_7 <= alpha_8 iff d <= dstar(N), for 7 <= N <= N_max, 4 <= d <= N.
SweepReport sweep_dstar(long N_max = 30, int jobs = 1);

/// Records, for d = 6 and each 7 <= N <= N_max, the full alpha breakdown
/// (alpha'_4 substituted) and its argmin. Report-only: nothing gates.
SweepReport sweep_remark31(long N_max = 16, int jobs = 1);

/// alpha_8 - alpha_1 at d = 2N + a against the closed form
///   4(N-3) + (3N+a-6)! / ((N-3)!(2N+a)!)
///          * [10N(2N+a-1)(2N+a-2) - (N-3)(3N+a-5)(11N+5a-4)].
/// Requires N >= 7, a >= 0.
IdentityReport check_identity_32(long N, long a);

/// alpha_6 - alpha_8 against the closed form
///   -N + (d+N-6)! / ((N-3)!(d-1)!) * [-d^2 + d(N-1) + (N^2 - 9N + 18)],
/// plus positivity of the direct difference. Requires N >= 7, 4 <= d <= N.
IdentityReport check_identity_33(long N, long d);

}  // namespace factbound
