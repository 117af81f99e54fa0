#include "factbound/strata.hpp"

#include <algorithm>
#include <array>

namespace factbound {

namespace {

void check_params(const char* who, const Params& p) {
  if (p.N < 7)
    throw domain_error(std::string(who) + ": requires N >= 7, N = " +
                       std::to_string(p.N));
  if (p.d < 4)
    throw domain_error(std::string(who) + ": requires d >= 4, d = " +
                       std::to_string(p.d));
}

// Slots entering the minimum, in tie-breaking order. The a4 slot reads
// a4prime when d = 6.
constexpr std::array<const char*, 8> kMinOrder = {"a1", "a2", "a3", "a4",
                                                  "a5", "a6", "a7", "a8"};

}  // namespace

Admissibility is_admissible(long N, const StratumKey& s) {
  std::string why = admissibility_violation(N, s.i, s.k, s.l);
  if (why.empty()) return {true, {}};
  return {false, std::move(why)};
}

std::vector<Codim3Stratum> enumerate_codim3_strata(long N) {
  if (N < 7)
    throw domain_error("enumerate_codim3_strata: requires N >= 7, N = " +
                       std::to_string(N));
  return {
      {N - 4, N - 4}, {N - 3, std::nullopt}, {N - 2, N - 4}, {N - 2, N - 3},
      {N - 2, N - 2}, {N - 1, N - 4},        {N - 1, N - 3}, {N, N - 4},
  };
}

AlphaBreakdown alphas(const Params& p) {
  check_params("alphas", p);
  const long d = p.d, N = p.N;
  AlphaBreakdown out;
  out.d = d;
  out.N = N;
  out.d6_mode = (d == 6);
  auto& a = out.alpha;
  a["a1"] = binomial(d + N - 4, N - 4) + 4 * binomial(d + N - 5, N - 4) -
            BigInt(4) * (N - 3);
  a["a2a"] = binomial(d + N - 3, N - 3) - binomial(d + N - 7, N - 3) +
             3 * (binomial(d + N - 4, N - 3) - binomial(d + N - 6, N - 3)) -
             BigInt(N + 5) * (N - 2) / 2;
  a["a2b"] = binomial(d + N - 3, N - 3) + 2 * binomial(d + N - 4, N - 3) -
             BigInt(3) * (N - 2);
  a["a2"] = std::min(a["a2a"], a["a2b"]);
  a["a3"] = 3 * binomial(d + N - 6, N - 3) + 2 * binomial(d + N - 5, N - 4) -
            BigInt(2) * (N - 1);
  a["a4"] = binomial(d + N - 2, N - 2) - binomial(d + N - 6, N - 2) +
            binomial(d + N - 5, N - 4) - BigInt(N + 4) * (N - 1) / 2;
  a["a4prime"] = binomial(N + 4, 6) - binomial(N + 1, 3) + binomial(N - 1, 3) -
                 BigInt(2) * (N - 1);
  a["a5"] = binomial(d + N - 2, N - 2) - BigInt(2) * (N - 1);
  a["a6"] = 4 * binomial(d + N - 6, N - 3) + binomial(d + N - 5, N - 4) -
            BigInt(N);
  a["a7"] = 3 * binomial(d + N - 5, N - 2) - BigInt(N);
  a["a8"] = 5 * binomial(d + N - 6, N - 3);

  bool first = true;
  for (const char* slot : kMinOrder) {
    const std::string id =
        (out.d6_mode && std::string(slot) == "a4") ? "a4prime" : slot;
    const BigInt& v = a.at(id);
    if (first || v < out.min_value) {
      out.min_value = v;
      out.argmin = id;
      first = false;
    }
  }
  return out;
}

BigInt theorem31_bound(const Params& p) { return alphas(p).min_value; }

BoundValue theorem01_bound(const Params& p) {
  check_params("theorem01_bound", p);
  const long d = p.d, N = p.N;
  const BigInt index_one = 5 * binomial(d + N - 6, N - 3);
  if (d < N) {
    const BigInt projections = 3 * binomial(d + N - 5, N - 2) - N;
    return {std::min(projections, index_one), "fano"};
  }
  if (d == N) {
    return {index_one, "fano-index-one"};
  }
  if (d >= 2 * N) {
    return {binomial(d + N - 4, N - 4) + 4 * binomial(d + N - 5, N - 4) -
                BigInt(4) * (N - 3),
            "general-type"};
  }
  return {theorem31_bound(p), "intermediate"};
}

long dstar(long N) {
  if (N < 7)
    throw domain_error("dstar: requires N >= 7, N = " + std::to_string(N));
  const long m = N / 3;
  const long e = N % 3;
  return 2 * m + e + 1;
}

ConsistencyReport composition_consistency(const Params& p) {
  AlphaBreakdown a = alphas(p);
  const long N = p.N;
  const long i = N - 4;

  ConsistencyReport report;
  report.d = p.d;
  report.N = N;
  report.d6_mode = a.d6_mode;

  auto add = [&](const std::string& id, BigInt composed) {
    const BigInt& printed = a.alpha.at(id);
    BigInt diff = printed - composed;
    report.entries.push_back({id, printed, std::move(composed), std::move(diff)});
  };

  // Plane-family corrections: (i+2)(N-i-1) for the (i+1)-plane strata,
  // (k+1)(N-k) for the general ones. codim_linear_stratum is already
  // corrected.
  const BigInt plane12 = BigInt(i + 2) * (N - i - 1);
  auto general = [&](long k, long l) {
    return bound_general(p, i, k, l).value - BigInt(k + 1) * (N - k);
  };

  add("a1", codim_linear_stratum(p, i));
  add("a2a", codim_prop12i(p, i) - plane12);
  add("a2b", codim_prop12iii(p, i) - plane12);
  add("a3", general(N - 2, N - 4));
  add(a.d6_mode ? "a4prime" : "a4", general(N - 2, N - 3));
  add("a5", general(N - 2, N - 2));
  add("a6", general(N - 1, N - 4));
  add("a7", general(N - 1, N - 3));
  add("a8", general(N, N - 4));
  return report;
}

}  // namespace factbound
