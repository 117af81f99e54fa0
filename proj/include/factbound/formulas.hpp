#pragma once

#include <string>
#include <utility>

#include "factbound/exactmath.hpp"

namespace factbound {

/// Degree d of the forms and ambient projective dimension N.
struct Params {
  long d = 0;
  long N = 0;
};

/// An exact bound together with the tag of the branch that produced it
/// (thm1.1, thm1.2i, thm1.2ii-d6, thm1.3, or a regime tag).
struct BoundValue {
  BigInt value;
  std::string source;
};

/// tau(a,b,c) = max{ binomial(a+c, c), a*b + 1 } for a, b, c >= 1.
BigInt tau(long a, long b, long c);

/// Codimension of the set of degree-d forms singular along a fixed i-plane,
/// corrected for the i-plane family:
///   binomial(d+i, d) + (N-i)*binomial(d+i-1, d-1) - (i+1)(N-i).
/// Requires d >= 3 and 0 <= i <= N-1.
BigInt codim_linear_stratum(const Params& p, long i);

/// Number of independent conditions for a degree-d form on P^{i+1} to acquire
/// a double component of degree q:
///   binomial(d+i+1, i+1) - binomial(d-2q+i+1, i+1) - binomial(q+i+1, i+1).
/// Requires d >= 4, i >= 0, 2 <= q <= floor(d/2).
BigInt e_q(long d, long i, long q);

/// Minimizer of e_q over q = 2..floor(d/2); smallest q wins ties.
struct EqMinimum {
  long q_min;
  BigInt e_min;
};
EqMinimum lemma11_argmin(long d, long i);

/// Conditions a fixed degree-q divisor imposes on a restricted derivative:
///   binomial(d+i, i+1) - binomial(d-q+i, i+1),
/// strictly increasing in q on 2 <= q <= d-1. Requires d >= 4.
BigInt delta_q(long d, long i, long q);

/// Codimension (inside the full coefficient space, plane fixed) of the set of
/// forms whose restriction to a fixed (i+1)-plane has a double component and
/// whose singular set in that plane is i-dimensional. Requires d >= 4 and
/// 0 <= i <= N-1; the pair (d = 6, i = N-1) is out of domain — use
/// codim_prop12ii for it.
BigInt codim_prop12i(const Params& p, long i);

/// The d = 6, i = N-1 special value: binomial(N+6,6) - binomial(N+3,3) - 1.
/// Requires N >= 2.
BigInt codim_prop12ii(long N);

/// Codimension (plane fixed) of the companion case where the form vanishes on
/// the whole (i+1)-plane: the minimum of the two branch values. Requires
/// d >= 4 and 0 <= i <= N-2.
BigInt codim_prop12iii(const Params& p, long i);

/// The q-dependent condition count behind codim_prop12iii:
///   binomial(d+i+1, i+1)
///   + (N-i-1)*(binomial(d+i, i+1) - binomial(d-q+i, i+1))
///   - binomial(i+q+1, i+1)
/// for 2 <= q <= d-1. Its minimum over q sits at an end value of q.
BigInt prop12iii_q_expression(const Params& p, long i, long q);

/// Lower bound (k-l+1) * binomial(d+l-2, l+1) for the codimension of the set
/// of degree-d forms on P^k with an l-dimensional singular component spanning
/// the whole P^k. Requires d >= 3 and 0 <= l <= k.
BigInt prop21_bound(long d, long k, long l);

/// Lower bound for the codimension of the set of degree-(d-1) forms on P^k
/// vanishing on a fixed non-degenerate i-dimensional subvariety: the better
/// of the projection count binomial(d-1+i, i) and the decomposable-forms
/// count (d-1)k + 1. Equals tau(d-1, k, i) for i >= 1; i = 0 is accepted via
/// the binomial convention. Requires d >= 2, k >= 1, i >= 0.
BigInt vanishing_bound(long d, long k, long i);

/// Returns the empty string when (i,k,l) is admissible inside P^N, i.e.
/// 1 <= i <= l <= k <= N and N+i >= k+l; otherwise names the violated
/// constraint.
std::string admissibility_violation(long N, long i, long k, long l);

/// General per-plane codimension bound for the stratum with component
/// dimension i, span dimension k and restricted singular dimension l,
/// dispatching on l vs k:
///   l <= k-2 : (k-l+1)*binomial(d+l-2, l+1) + (N+i-k-l)*tau(d-1, k, i)
///   l == k-1 : bracket term + (N+i-2k+1)*tau(d-1, k, i)   (d != 6)
///              bracket term + (N+i-2k+1)*tau(5, k, i)     (d == 6)
///   l == k   : binomial(d+k, k) + (N+i-2k)*tau(d-1, k, i)
/// The source tag records the branch. Rejects inadmissible triples, naming
/// the violated constraint. Requires d >= 4.
BoundValue bound_general(const Params& p, long i, long k, long l);

}  // namespace factbound
