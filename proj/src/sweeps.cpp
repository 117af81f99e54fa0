#include "factbound/sweeps.hpp"

#include <array>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

namespace factbound {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw domain_error(msg);
}

// Outcome of checking one parameter tuple.
struct Outcome {
  bool counted = true;
  std::optional<SweepFailure> failure;
  std::optional<SweepRecord> record;
};

// Evaluates fn(0..n-1) across `jobs` threads; slot i holds fn(i), so the
// merged order is canonical regardless of scheduling.
std::vector<Outcome> map_indexed(std::size_t n, int jobs,
                                 const std::function<Outcome(std::size_t)>& fn) {
  std::vector<Outcome> out(n);
  const std::size_t workers =
      std::min<std::size_t>(std::max(jobs, 1), n == 0 ? 1 : n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      out[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

SweepReport fold(std::string claim_id, std::string range,
                 std::vector<std::string> tuple_names,
                 std::vector<Outcome> outcomes, bool report_only = false) {
  SweepReport report;
  report.claim_id = std::move(claim_id);
  report.range = std::move(range);
  report.tuple_names = std::move(tuple_names);
  report.report_only = report_only;
  for (auto& o : outcomes) {
    if (o.counted) {
      ++report.total;
      if (o.failure)
        report.failures.push_back(std::move(*o.failure));
      else
        ++report.passes;
    }
    if (o.record) report.recorded.push_back(std::move(*o.record));
  }
  return report;
}

std::string str(const BigInt& v) { return v.get_str(); }

}  // namespace

SweepReport sweep_lemma11(long d_max, long i_max, int jobs) {
  require(d_max >= 7, "sweep_lemma11: requires d_max >= 7");
  require(i_max >= 1, "sweep_lemma11: requires i_max >= 1");
  std::vector<std::pair<long, long>> tuples;
  for (long d = 4; d <= d_max; ++d)
    for (long i = 0; i <= i_max; ++i) tuples.push_back({d, i});

  auto outcomes = map_indexed(tuples.size(), jobs, [&](std::size_t t) {
    const auto [d, i] = tuples[t];
    Outcome o;
    const EqMinimum m = lemma11_argmin(d, i);
    if (d == 6 && i < 2) {
      // The q = 3 minimum only sets in from i = 2; record the small-i rows.
      o.record = SweepRecord{{d, i},
                             {{"argmin_q", std::to_string(m.q_min)},
                              {"E2", str(e_q(d, i, 2))},
                              {"E3", str(e_q(d, i, 3))}}};
      return o;
    }
    const long want = (d == 6) ? 3 : 2;
    if (m.q_min != want) {
      o.failure = SweepFailure{{d, i},
                               "argmin_q == " + std::to_string(want),
                               {{"argmin_q", std::to_string(m.q_min)},
                                {"E_min", str(m.e_min)}}};
    }
    return o;
  });

  // E_3 > E_2 for d >= 7, counted as its own set of checks.
  std::vector<std::pair<long, long>> e_tuples;
  for (long d = 7; d <= d_max; ++d)
    for (long i = 0; i <= i_max; ++i) e_tuples.push_back({d, i});
  auto e_outcomes = map_indexed(e_tuples.size(), jobs, [&](std::size_t t) {
    const auto [d, i] = e_tuples[t];
    Outcome o;
    const BigInt e2 = e_q(d, i, 2), e3 = e_q(d, i, 3);
    if (!(e3 > e2))
      o.failure = SweepFailure{{d, i}, "E_3 > E_2",
                               {{"E2", str(e2)}, {"E3", str(e3)}}};
    return o;
  });
  outcomes.insert(outcomes.end(), e_outcomes.begin(), e_outcomes.end());

  return fold("lemma11",
              "4<=d<=" + std::to_string(d_max) + ", 0<=i<=" + std::to_string(i_max),
              {"d", "i"}, std::move(outcomes));
}

SweepReport sweep_prop12iii_endpoints(long d_max, long N_max, int jobs) {
  require(d_max >= 5, "sweep_prop12iii_endpoints: requires d_max >= 5");
  require(N_max >= 2, "sweep_prop12iii_endpoints: requires N_max >= 2");
  std::vector<std::array<long, 3>> tuples;
  for (long d = 4; d <= d_max; ++d)
    for (long N = 2; N <= N_max; ++N)
      for (long i = 0; i <= N - 2; ++i) tuples.push_back({d, N, i});

  auto outcomes = map_indexed(tuples.size(), jobs, [&](std::size_t t) {
    const auto [d, N, i] = tuples[t];
    const Params p{d, N};
    Outcome o;
    BigInt lo = prop12iii_q_expression(p, i, 2);
    long at = 2;
    for (long q = 3; q <= d - 1; ++q) {
      BigInt v = prop12iii_q_expression(p, i, q);
      if (v < lo) {
        lo = std::move(v);
        at = q;
      }
    }
    const BigInt ends = std::min(prop12iii_q_expression(p, i, 2),
                                 prop12iii_q_expression(p, i, d - 1));
    if (lo != ends)
      o.failure = SweepFailure{{d, N, i},
                               "min over q attained at q = 2 or q = d-1",
                               {{"min", str(lo)},
                                {"argmin_q", std::to_string(at)},
                                {"end_min", str(ends)}}};
    return o;
  });
  return fold("prop12iii-endpoints",
              "4<=d<=" + std::to_string(d_max) + ", 2<=N<=" +
                  std::to_string(N_max) + ", 0<=i<=N-2",
              {"d", "N", "i"}, std::move(outcomes));
}

SweepReport sweep_tau_simplification(long d_max, long N_max, int jobs) {
  require(N_max >= 7, "sweep_tau_simplification: requires N_max >= 7");
  require(d_max >= 4, "sweep_tau_simplification: requires d_max >= 4");
  std::vector<std::array<long, 3>> tuples;
  for (long N = 7; N <= N_max; ++N)
    for (long d = 4; d <= d_max; ++d)
      for (long k = N - 4; k <= N; ++k) tuples.push_back({d, N, k});

  auto outcomes = map_indexed(tuples.size(), jobs, [&](std::size_t t) {
    const auto [d, N, k] = tuples[t];
    Outcome o;
    const BigInt lhs = tau(d - 1, k, N - 4);
    const BigInt rhs = binomial(d + N - 5, N - 4);
    if (k == N) {
      o.counted = false;  // recorded, never gates
      if (lhs != rhs)
        o.record = SweepRecord{{d, N, k}, {{"tau", str(lhs)}, {"binomial", str(rhs)}}};
      return o;
    }
    if (lhs != rhs)
      o.failure = SweepFailure{{d, N, k},
                               "tau(d-1,k,N-4) == binomial(d+N-5,N-4)",
                               {{"tau", str(lhs)}, {"binomial", str(rhs)}}};
    return o;
  });
  return fold("tau-simplification",
              "4<=d<=" + std::to_string(d_max) + ", 7<=N<=" +
                  std::to_string(N_max) + ", N-4<=k<=N-1 (k=N recorded)",
              {"d", "N", "k"}, std::move(outcomes));
}

SweepReport sweep_fano_dominance(long N_max, int jobs) {
  require(N_max >= 7, "sweep_fano_dominance: requires N_max >= 7");
  std::vector<std::pair<long, long>> tuples;
  for (long N = 7; N <= N_max; ++N)
    for (long d = 4; d <= N; ++d) tuples.push_back({N, d});

  auto outcomes = map_indexed(tuples.size(), jobs, [&](std::size_t t) {
    const auto [N, d] = tuples[t];
    Outcome o;
    const AlphaBreakdown a = alphas({d, N});
    const BigInt floor78 = std::min(a.alpha.at("a7"), a.alpha.at("a8"));
    std::map<std::string, std::string> bad;
    for (const char* id : {"a1", "a2", "a3", "a4", "a5", "a6"}) {
      const std::string key =
          (a.d6_mode && std::string(id) == "a4") ? "a4prime" : id;
      if (a.alpha.at(key) < floor78) bad[key] = str(a.alpha.at(key));
    }
    if (!bad.empty()) {
      bad["min(a7,a8)"] = str(floor78);
      o.failure = SweepFailure{{N, d}, "alpha_i >= min(a7,a8) for i = 1..6",
                               std::move(bad)};
    }
    return o;
  });

  // At d = N the minimum must land on a8.
  std::vector<long> ns;
  for (long N = 7; N <= N_max; ++N) ns.push_back(N);
  auto argmin_outcomes = map_indexed(ns.size(), jobs, [&](std::size_t t) {
    const long N = ns[t];
    Outcome o;
    const AlphaBreakdown a = alphas({N, N});
    if (a.argmin != "a8")
      o.failure = SweepFailure{{N, N}, "argmin at d = N is a8",
                               {{"argmin", a.argmin}, {"min", str(a.min_value)}}};
    return o;
  });
  outcomes.insert(outcomes.end(), argmin_outcomes.begin(), argmin_outcomes.end());

  return fold("fano-dominance",
              "7<=N<=" + std::to_string(N_max) + ", 4<=d<=N", {"N", "d"},
              std::move(outcomes));
}

SweepReport sweep_gt_dominance(long N_max, long a_max, int jobs) {
  require(N_max >= 7, "sweep_gt_dominance: requires N_max >= 7");
  require(a_max >= 0, "sweep_gt_dominance: requires a_max >= 0");
  std::vector<std::pair<long, long>> tuples;
  for (long N = 7; N <= N_max; ++N)
    for (long a = 0; a <= a_max; ++a) tuples.push_back({N, a});

  auto outcomes = map_indexed(tuples.size(), jobs, [&](std::size_t t) {
    const auto [N, a] = tuples[t];
    Outcome o;
    const AlphaBreakdown al = alphas({2 * N + a, N});
    const BigInt& a1 = al.alpha.at("a1");
    std::map<std::string, std::string> bad;
    for (const char* id : {"a2a", "a2b", "a3", "a4", "a5", "a6", "a7", "a8"})
      if (al.alpha.at(id) < a1) bad[id] = str(al.alpha.at(id));
    if (!bad.empty()) {
      bad["a1"] = str(a1);
      o.failure =
          SweepFailure{{N, a}, "alpha_i >= alpha_1 for i >= 2", std::move(bad)};
    }
    return o;
  });
  return fold("gt-dominance",
              "7<=N<=" + std::to_string(N_max) + ", 0<=a<=" +
                  std::to_string(a_max) + ", d=2N+a",
              {"N", "a"}, std::move(outcomes));
}

SweepReport sweep_dstar(long N_max, int jobs) {
  require(N_max >= 7, "sweep_dstar: requires N_max >= 7");
  std::vector<std::pair<long, long>> tuples;
  for (long N = 7; N <= N_max; ++N)
    for (long d = 4; d <= N; ++d) tuples.push_back({N, d});

  auto outcomes = map_indexed(tuples.size(), jobs, [&](std::size_t t) {
    const auto [N, d] = tuples[t];
    Outcome o;
    const AlphaBreakdown a = alphas({d, N});
    const bool le = a.alpha.at("a7") <= a.alpha.at("a8");
    const bool want = d <= dstar(N);
    if (le != want)
      o.failure = SweepFailure{{N, d},
                               "(a7 <= a8) iff (d <= dstar(N))",
                               {{"a7", str(a.alpha.at("a7"))},
                                {"a8", str(a.alpha.at("a8"))},
                                {"dstar", std::to_string(dstar(N))}}};
    return o;
  });
  return fold("dstar", "7<=N<=" + std::to_string(N_max) + ", 4<=d<=N",
              {"N", "d"}, std::move(outcomes));
}

SweepReport sweep_remark31(long N_max, int jobs) {
  require(N_max >= 7, "sweep_remark31: requires N_max >= 7");
  std::vector<long> ns;
  for (long N = 7; N <= N_max; ++N) ns.push_back(N);

  auto outcomes = map_indexed(ns.size(), jobs, [&](std::size_t t) {
    const long N = ns[t];
    Outcome o;
    const AlphaBreakdown a = alphas({6, N});
    SweepRecord rec;
    rec.tuple = {N};
    for (const auto& [id, v] : a.alpha) rec.values[id] = str(v);
    rec.values["argmin"] = a.argmin;
    rec.values["min"] = str(a.min_value);
    rec.values["agrees_with_a8_claim"] = (a.argmin == "a8") ? "true" : "false";
    o.record = std::move(rec);
    return o;
  });
  return fold("remark31", "d=6, 7<=N<=" + std::to_string(N_max), {"N"},
              std::move(outcomes), /*report_only=*/true);
}

IdentityReport check_identity_32(long N, long a) {
  require(N >= 7, "check_identity_32: requires N >= 7");
  require(a >= 0, "check_identity_32: requires a >= 0");
  const long d = 2 * N + a;
  const AlphaBreakdown al = alphas({d, N});

  IdentityReport r;
  r.claim_id = "identity-32";
  r.params = {{"N", N}, {"a", a}};
  r.lhs = Rational(al.alpha.at("a8") - al.alpha.at("a1"));
  const Rational ratio =
      make_rational(factorial(3 * N + a - 6), factorial(N - 3) * factorial(2 * N + a));
  const BigInt bracket = BigInt(10) * N * (2 * N + a - 1) * (2 * N + a - 2) -
                         BigInt(N - 3) * (3 * N + a - 5) * (11 * N + 5 * a - 4);
  r.rhs = Rational(BigInt(4) * (N - 3)) + ratio * Rational(bracket);
  r.equal = (r.lhs == r.rhs);
  r.lhs_positive = (r.lhs > 0);
  return r;
}

IdentityReport check_identity_33(long N, long d) {
  require(N >= 7, "check_identity_33: requires N >= 7");
  require(d >= 4 && d <= N, "check_identity_33: requires 4 <= d <= N");
  const AlphaBreakdown al = alphas({d, N});

  IdentityReport r;
  r.claim_id = "identity-33";
  r.params = {{"N", N}, {"d", d}};
  r.lhs = Rational(al.alpha.at("a6") - al.alpha.at("a8"));
  const Rational ratio =
      make_rational(factorial(d + N - 6), factorial(N - 3) * factorial(d - 1));
  const BigInt bracket =
      -BigInt(d) * d + BigInt(d) * (N - 1) + (BigInt(N) * N - 9 * N + 18);
  r.rhs = Rational(BigInt(-N)) + ratio * Rational(bracket);
  r.equal = (r.lhs == r.rhs);
  r.lhs_positive = (r.lhs > 0);
  return r;
}

}  // namespace factbound
