#include "factbound/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "factbound/formulas.hpp"

namespace factbound {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw domain_error(msg);
}

// Dense systems only; anything bigger is outside the oracle's desk scale.
constexpr std::size_t kMaxColumns = 1u << 20;
constexpr std::size_t kMaxEntries = 50'000'000;

std::size_t checked_columns(long d, long n) {
  const BigInt cnt = binomial(d + n, n);
  require(cnt <= static_cast<long>(kMaxColumns),
          "coefficient space too large for the dense rank oracle: binomial(" +
              std::to_string(d + n) + ", " + std::to_string(n) + ") = " +
              cnt.get_str());
  return static_cast<std::size_t>(cnt.get_ui());
}

void check_entry_budget(std::size_t rows, std::size_t cols) {
  require(rows <= kMaxEntries / std::max<std::size_t>(cols, 1),
          "condition system too large for the dense rank oracle (" +
              std::to_string(rows) + " x " + std::to_string(cols) + ")");
}

// Deterministic unbiased draws from a seeded engine. All randomness in this
// module flows through one of these, constructed from the caller's seed.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint32_t below(std::uint32_t bound) {
    const std::uint64_t threshold = (0 - static_cast<std::uint64_t>(bound)) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return static_cast<std::uint32_t>(r % bound);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Sampled residues live below the smaller prime, so the same integers are
// valid representatives modulo both.
constexpr std::uint32_t kSampleBound = kAlternatePrime;

ProjectivePoint sample_point(SeededRng& rng, std::size_t n_coords,
                             bool first_nonzero) {
  ProjectivePoint p;
  p.coords.resize(n_coords);
  for (;;) {
    bool any = false;
    for (std::size_t t = 0; t < n_coords; ++t) {
      if (t == 0 && first_nonzero)
        p.coords[t] = 1 + rng.below(kSampleBound - 1);
      else
        p.coords[t] = rng.below(kSampleBound);
      any = any || p.coords[t] != 0;
    }
    if (any) return p;
  }
}

bool independent(const std::vector<ProjectivePoint>& pts, std::uint32_t prime) {
  if (pts.empty()) return true;
  FieldMatrix m(pts.size(), pts[0].coords.size(), prime);
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < pts[r].coords.size(); ++c)
      m.at(r, c) = pts[r].coords[c] % prime;
  return field_rank(std::move(m)) == pts.size();
}

std::vector<ProjectivePoint> sample_independent_points(SeededRng& rng, long m,
                                                       std::size_t n_coords,
                                                       bool off_pi,
                                                       int max_resamples) {
  for (int attempt = 0; attempt < max_resamples; ++attempt) {
    std::vector<ProjectivePoint> pts;
    pts.reserve(static_cast<std::size_t>(m));
    for (long t = 0; t < m; ++t) pts.push_back(sample_point(rng, n_coords, off_pi));
    if (independent(pts, kPrimaryPrime) && independent(pts, kAlternatePrime))
      return pts;
  }
  throw sampling_error("no linearly independent point set within " +
                       std::to_string(max_resamples) + " resamples");
}

SubspaceFamily sample_family(SeededRng& rng, long r, long d) {
  SubspaceFamily fam;
  fam.r = r;
  fam.d = d;
  fam.lambda.assign(static_cast<std::size_t>(r), {});
  for (auto& row : fam.lambda) {
    row.assign(static_cast<std::size_t>(d), 0);  // lambda_{i,0} = 0
    for (std::size_t j = 1; j < row.size(); ++j) {
      for (;;) {
        const std::uint32_t v = 1 + rng.below(kSampleBound - 1);
        if (std::find(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(j), v) ==
            row.begin() + static_cast<std::ptrdiff_t>(j)) {
          row[j] = v;
          break;
        }
      }
    }
  }
  return fam;
}

// pow tables per coordinate, exponents 0..max_exp.
std::vector<std::vector<std::uint32_t>> power_table(
    const std::vector<std::uint32_t>& coords, long max_exp, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> tbl(coords.size());
  for (std::size_t t = 0; t < coords.size(); ++t) {
    tbl[t].resize(static_cast<std::size_t>(max_exp) + 1);
    tbl[t][0] = 1;
    const std::uint32_t base = coords[t] % p;
    for (long e = 1; e <= max_exp; ++e)
      tbl[t][static_cast<std::size_t>(e)] = mul_mod(tbl[t][static_cast<std::size_t>(e - 1)], base, p);
  }
  return tbl;
}

std::string exponents_str(const std::vector<long>& e) {
  std::string s = "(";
  for (std::size_t t = 0; t < e.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(e[t]);
  }
  return s + ")";
}

OracleResult certify(ConditionSystem primary, ConditionSystem alternate,
                     BigInt expected) {
  OracleResult res;
  res.rows = primary.matrix.rows();
  res.cols = primary.matrix.cols();
  res.expected = std::move(expected);
  res.rank_primary = field_rank(std::move(primary.matrix));
  res.rank_alternate = field_rank(std::move(alternate.matrix));
  res.match = BigInt(static_cast<unsigned long>(res.rank_primary)) == res.expected &&
              res.rank_alternate == res.rank_primary;
  return res;
}

}  // namespace

std::vector<Monomial> monomials(long d, long n) {
  require(d >= 0, "monomials: requires d >= 0");
  require(n >= 0, "monomials: requires n >= 0");
  std::vector<Monomial> out;
  std::vector<long> cur(static_cast<std::size_t>(n) + 1, 0);
  // Descending lexicographic fill.
  auto rec = [&](auto&& self, long pos, long rem) -> void {
    if (pos == n) {
      cur[static_cast<std::size_t>(pos)] = rem;
      out.push_back({cur});
      return;
    }
    for (long e = rem; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, rem - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

ConditionSystem singular_point_rows(const ProjectivePoint& point, long d,
                                    std::uint32_t prime) {
  require(d >= 3, "singular_point_rows: requires d >= 3");
  require(!point.coords.empty(), "singular_point_rows: empty point");
  const long n = static_cast<long>(point.coords.size()) - 1;
  const std::size_t cols = checked_columns(d, n);
  const auto mons = monomials(d, n);
  const auto pow = power_table(point.coords, d, prime);

  ConditionSystem sys{FieldMatrix(static_cast<std::size_t>(n) + 1, cols, prime), {}};
  for (long j = 0; j <= n; ++j) {
    for (std::size_t c = 0; c < mons.size(); ++c) {
      const auto& a = mons[c].exponents;
      const long aj = a[static_cast<std::size_t>(j)];
      if (aj == 0) continue;
      std::uint32_t v = static_cast<std::uint32_t>(aj % prime);
      for (long t = 0; t <= n; ++t) {
        const long e = a[static_cast<std::size_t>(t)] - (t == j ? 1 : 0);
        v = mul_mod(v, pow[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)], prime);
      }
      sys.matrix.at(static_cast<std::size_t>(j), c) = v;
    }
    sys.provenance.push_back("d/dx" + std::to_string(j));
  }
  return sys;
}

OracleResult verify_lemma21(long d, long N, long m, std::uint64_t seed,
                            int max_resamples) {
  require(d >= 3, "verify_lemma21: requires d >= 3");
  require(N >= 1, "verify_lemma21: requires N >= 1");
  require(m >= 1 && m <= N + 1, "verify_lemma21: requires 1 <= m <= N+1");
  const std::size_t cols = checked_columns(d, N);
  check_entry_budget(static_cast<std::size_t>(m) * (static_cast<std::size_t>(N) + 1), cols);

  SeededRng rng(seed);
  const auto pts = sample_independent_points(rng, m, static_cast<std::size_t>(N) + 1,
                                             /*off_pi=*/false, max_resamples);

  auto build = [&](std::uint32_t prime) {
    ConditionSystem sys{FieldMatrix(0, cols, prime), {}};
    for (std::size_t t = 0; t < pts.size(); ++t) {
      ConditionSystem block = singular_point_rows(pts[t], d, prime);
      for (std::size_t r = 0; r < block.matrix.rows(); ++r) {
        std::vector<std::uint32_t> row(cols);
        for (std::size_t c = 0; c < cols; ++c) row[c] = block.matrix.at(r, c);
        sys.matrix.append_row(row);
        sys.provenance.push_back("p" + std::to_string(t + 1) + " " +
                                 block.provenance[r]);
      }
    }
    return sys;
  };

  OracleResult res = certify(build(kPrimaryPrime), build(kAlternatePrime),
                             BigInt(m) * (N + 1));
  res.check_id = "lemma21";
  res.params = {{"d", d}, {"N", N}, {"m", m}};
  res.seed = seed;
  res.seeded = true;
  return res;
}

OracleResult verify_prop11(long d, long N, long i) {
  require(d >= 3, "verify_prop11: requires d >= 3");
  require(N >= 1, "verify_prop11: requires N >= 1");
  require(i >= 0 && i <= N - 1, "verify_prop11: requires 0 <= i <= N-1");
  const std::size_t cols = checked_columns(d, N);
  const auto mons = monomials(d, N);
  std::map<std::vector<long>, std::size_t> index;
  for (std::size_t c = 0; c < mons.size(); ++c) index[mons[c].exponents] = c;

  auto pad = [&](const std::vector<long>& head) {
    std::vector<long> full(static_cast<std::size_t>(N) + 1, 0);
    std::copy(head.begin(), head.end(), full.begin());
    return full;
  };

  auto build = [&](std::uint32_t prime) {
    ConditionSystem sys{FieldMatrix(0, cols, prime), {}};
    std::vector<std::uint32_t> row(cols, 0);
    auto unit = [&](std::size_t c, const std::string& tag) {
      std::fill(row.begin(), row.end(), 0);
      row[c] = 1;
      sys.matrix.append_row(row);
      sys.provenance.push_back(tag);
    };
    // Coefficients of the monomials living on the i-plane (restriction of g),
    // then of x_j * (degree d-1 monomials on the plane) for each j > i
    // (restrictions of the derivatives).
    for (const auto& mu : monomials(d, i))
      unit(index.at(pad(mu.exponents)), "plane " + exponents_str(mu.exponents));
    for (long j = i + 1; j <= N; ++j) {
      for (const auto& nu : monomials(d - 1, i)) {
        std::vector<long> full = pad(nu.exponents);
        full[static_cast<std::size_t>(j)] += 1;
        unit(index.at(full),
             "d/dx" + std::to_string(j) + " " + exponents_str(nu.exponents));
      }
    }
    return sys;
  };

  OracleResult res = certify(build(kPrimaryPrime), build(kAlternatePrime),
                             binomial(d + i, d) + (N - i) * binomial(d + i - 1, d - 1));
  res.check_id = "prop11";
  res.params = {{"d", d}, {"N", N}, {"i", i}};
  return res;
}

OracleResult verify_prop22(long d, long N, long r, long m, std::uint64_t seed,
                           int max_resamples) {
  require(d >= 3, "verify_prop22: requires d >= 3");
  require(r >= 1 && r <= N - 1, "verify_prop22: requires 1 <= r <= N-1");
  require(m >= 1 && m <= N - r + 1, "verify_prop22: requires 1 <= m <= N-r+1");
  const std::size_t cols = checked_columns(d, N);
  const auto mons = monomials(d, N);

  // Multi-indices of the simplex |e| <= d-3, by total then lexicographically.
  std::vector<std::vector<long>> deltas;
  for (long total = 0; total <= d - 3; ++total)
    for (const auto& comp : monomials(total, r - 1)) deltas.push_back(comp.exponents);
  const BigInt expected = BigInt(m) * (N - r + 1) * simplex_point_count(r, d - 3);
  check_entry_budget(deltas.size() * static_cast<std::size_t>(m) *
                         (static_cast<std::size_t>(N - r) + 1),
                     cols);

  SeededRng rng(seed);
  const SubspaceFamily fam = sample_family(rng, r, d);
  std::vector<std::vector<ProjectivePoint>> points;  // per multi-index
  points.reserve(deltas.size());
  for (std::size_t ei = 0; ei < deltas.size(); ++ei)
    points.push_back(sample_independent_points(
        rng, m, static_cast<std::size_t>(N - r) + 1, /*off_pi=*/true, max_resamples));

  // The subspace Theta(e) = { x_t = lambda[t][e_t] * x_0, t = 1..r } is the
  // image of (y_0, y_1..y_{N-r}) |-> (y_0, lambda*y_0, y_1..y_{N-r}); the
  // ambient monomial x^a pulls back to the single y-monomial
  //   prod_t lambda[t][e_t]^{a_t} * y_0^{a_0+...+a_r} * prod_s y_s^{a_{r+s}}.
  auto build = [&](std::uint32_t prime) {
    ConditionSystem sys{FieldMatrix(0, cols, prime), {}};
    std::vector<std::uint32_t> pullback_coef(cols);
    std::vector<std::vector<long>> pullback_exp(cols);
    for (std::size_t ei = 0; ei < deltas.size(); ++ei) {
      const auto& e = deltas[ei];
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& a = mons[c].exponents;
        std::uint32_t coef = 1;
        long b0 = a[0];
        for (long t = 1; t <= r; ++t) {
          const std::uint32_t lam = fam.lambda[static_cast<std::size_t>(t - 1)]
                                              [static_cast<std::size_t>(e[static_cast<std::size_t>(t - 1)])] %
                                    prime;
          coef = mul_mod(coef, pow_mod(lam, static_cast<std::uint64_t>(a[static_cast<std::size_t>(t)]), prime), prime);
          b0 += a[static_cast<std::size_t>(t)];
        }
        pullback_coef[c] = coef;
        auto& b = pullback_exp[c];
        b.assign(static_cast<std::size_t>(N - r) + 1, 0);
        b[0] = b0;
        for (long s = 1; s <= N - r; ++s)
          b[static_cast<std::size_t>(s)] = a[static_cast<std::size_t>(r + s)];
      }
      for (std::size_t t = 0; t < points[ei].size(); ++t) {
        const auto pow = power_table(points[ei][t].coords, d, prime);
        for (long s = 0; s <= N - r; ++s) {
          std::vector<std::uint32_t> row(cols, 0);
          for (std::size_t c = 0; c < cols; ++c) {
            if (pullback_coef[c] == 0) continue;
            const auto& b = pullback_exp[c];
            const long bs = b[static_cast<std::size_t>(s)];
            if (bs == 0) continue;
            std::uint32_t v = mul_mod(pullback_coef[c],
                                      static_cast<std::uint32_t>(bs % prime), prime);
            for (long u = 0; u <= N - r; ++u) {
              const long exp = b[static_cast<std::size_t>(u)] - (u == s ? 1 : 0);
              v = mul_mod(v, pow[static_cast<std::size_t>(u)][static_cast<std::size_t>(exp)], prime);
            }
            row[c] = v;
          }
          sys.matrix.append_row(row);
          sys.provenance.push_back("e=" + exponents_str(e) + " p" +
                                   std::to_string(t + 1) + " d/dy" +
                                   std::to_string(s));
        }
      }
    }
    return sys;
  };

  OracleResult res = certify(build(kPrimaryPrime), build(kAlternatePrime), expected);
  res.check_id = "prop22";
  res.params = {{"d", d}, {"N", N}, {"r", r}, {"m", m}};
  res.seed = seed;
  res.seeded = true;
  return res;
}

Prop21Report investigate_prop21(long d, long k, long l, std::uint64_t seed) {
  require(d >= 4, "investigate_prop21: requires d >= 4");
  require(l >= 1 && l <= k - 1, "investigate_prop21: requires 1 <= l <= k-1");
  Prop21Report report;
  report.d = d;
  report.k = k;
  report.l = l;
  report.seed = seed;
  report.printed_bound = prop21_bound(d, k, l);
  report.reading_r_eq_l = verify_prop22(d, k, l, k - l + 1, seed);
  report.reading_r_eq_l.check_id = "prop21-investigate";
  if (l + 1 <= k - 1) {
    report.reading_r_eq_l_plus_1 = verify_prop22(d, k, l + 1, k - l, seed);
    report.reading_r_eq_l_plus_1->check_id = "prop21-investigate";
  }
  return report;
}

}  // namespace factbound
