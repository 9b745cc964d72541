#ifndef DIRAC_BOUNDS_HPP
#define DIRAC_BOUNDS_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dirac/error.hpp"
#include "dirac/incidence.hpp"
#include "dirac/rational.hpp"
#include "dirac/stats.hpp"

namespace dirac {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr unsigned long long kDefaultSubsetBudget = 10'000'000ULL;

// ---------------------------------------------------------------------------
// Point-count bounds t_k <= alpha*C(n,2)/C(k,2) and t_k < 2*alpha*n/k.

struct Thm3Row {
  int k = 0;
  std::int64_t tk = 0;
  Rational bound1;
  bool holds1 = false;
  bool bound2_applicable = false;
  Rational bound2;
  bool holds2 = true;
};

struct Thm3Report {
  int alpha = 1;
  int n = 0;
  /// Smallest k for which the second bound is checked: alpha * ceil(sqrt(2n)).
  std::int64_t part2_threshold = 0;
  std::vector<Thm3Row> rows;
  bool part1_holds = true;
  bool part2_holds = true;
  /// min over k of bound - t_k; absent when no k qualifies.
  std::optional<Rational> part1_margin;
  std::optional<Rational> part2_margin;
};

/// ceil(sqrt(x)) for x >= 0, exact.
inline std::int64_t ceil_sqrt(std::int64_t x) {
  if (x <= 0) return 0;
  std::int64_t r = 0;
  std::int64_t step = std::int64_t{1} << 31;
  for (; step > 0; step >>= 1)
    if ((r + step) <= 3037000499LL && (r + step) * (r + step) <= x) r += step;
  return r * r == x ? r : r + 1;
}

inline Thm3Report audit_theorem3(const Stats& stats, int alpha, int n) {
  Thm3Report rep;
  rep.alpha = alpha;
  rep.n = n;
  rep.part2_threshold = alpha * ceil_sqrt(2 * static_cast<std::int64_t>(n));
  const std::int64_t pair_incidences = alpha * choose(n, 2);

  for (int k = 2; k <= n; ++k) {
    Thm3Row row;
    row.k = k;
    if (auto it = stats.tk.find(k); it != stats.tk.end()) row.tk = it->second;
    row.bound1 = Rational(pair_incidences, choose(k, 2));
    row.holds1 = Rational(row.tk) <= row.bound1;
    Rational slack1 = row.bound1 - Rational(row.tk);
    if (!rep.part1_margin || slack1 < *rep.part1_margin) rep.part1_margin = slack1;
    rep.part1_holds = rep.part1_holds && row.holds1;

    row.bound2 = Rational(2 * static_cast<std::int64_t>(alpha) * n, k);
    row.bound2_applicable = k >= rep.part2_threshold;
    if (row.bound2_applicable) {
      row.holds2 = Rational(row.tk) < row.bound2;
      Rational slack2 = row.bound2 - Rational(row.tk);
      if (!rep.part2_margin || slack2 < *rep.part2_margin) rep.part2_margin = slack2;
      rep.part2_holds = rep.part2_holds && row.holds2;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Common-neighbour search over alpha-subsets of vertices.

struct CoverSearch {
  /// Largest number of curves incident to every vertex of one alpha-subset.
  int best = 0;
  /// Lexicographically least vertex-index subset achieving `best`.
  std::vector<std::size_t> witness;
  /// The curves shared by the witness vertices.
  std::vector<CurveId> witness_curves;
  unsigned long long evaluations = 0;
};

/// C(m, k) saturated at `cap + 1`.
inline unsigned long long subset_count(std::size_t m, int k, unsigned long long cap) {
  if (k < 0 || static_cast<std::size_t>(k) > m) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (m - static_cast<std::size_t>(k) + static_cast<std::size_t>(i)) / i;
  }
  if (c > cap) return cap + 1;
  return c.convert_to<unsigned long long>();
}

inline CoverSearch best_common_cover(const IncidenceStructure& s,
                                     unsigned long long budget = kDefaultSubsetBudget) {
  const auto& verts = s.vertices();
  const int alpha = s.alpha();
  const auto needed = subset_count(verts.size(), alpha, budget);
  if (needed > budget) {
    throw SizeLimitExceeded(needed, budget);
  }

  CoverSearch out;
  out.best = -1;
  std::vector<std::size_t> chosen;
  chosen.reserve(static_cast<std::size_t>(alpha));

  // Depth-first in lexicographic order; strict improvement keeps the least
  // witness on ties.
  auto recurse = [&](auto&& self, std::size_t start, const std::vector<CurveId>& common) -> void {
    if (static_cast<int>(chosen.size()) == alpha) {
      ++out.evaluations;
      if (static_cast<int>(common.size()) > out.best) {
        out.best = static_cast<int>(common.size());
        out.witness = chosen;
        out.witness_curves = common;
      }
      return;
    }
    const std::size_t remaining = static_cast<std::size_t>(alpha) - chosen.size();
    for (std::size_t i = start; i + remaining <= verts.size(); ++i) {
      std::vector<CurveId> next;
      if (chosen.empty()) {
        next = verts[i];
      } else {
        std::set_intersection(common.begin(), common.end(), verts[i].begin(),
                              verts[i].end(), std::back_inserter(next));
      }
      chosen.push_back(i);
      self(self, i + 1, next);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, {});
  if (out.best < 0) out.best = 0;
  return out;
}

// ---------------------------------------------------------------------------
// Proof steps of the alpha-curve weak Dirac bound: g >= h and
// C(g, alpha) * h >= n - 1 whenever no alpha vertices meet every curve.

struct DiracAuditReport {
  int alpha = 1;
  int n = 0;
  int g = 0;
  int h = 0;
  bool hypothesis_holds = false;
  std::vector<std::size_t> witness_subset;
  std::vector<CurveId> witness_curves;
  bool g_ge_h = false;
  bool binom_ineq_holds = false;
  BigInt binom_lhs;                 ///< C(g, alpha) * h
  BigInt binom_margin;              ///< C(g, alpha) * h - (n - 1)
};

inline BigInt big_choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

inline DiracAuditReport audit_dirac(const IncidenceStructure& s,
                                    unsigned long long budget = kDefaultSubsetBudget) {
  require_valid(s);
  DiracAuditReport rep;
  rep.alpha = s.alpha();
  rep.n = s.n();

  std::vector<int> degree(static_cast<std::size_t>(s.n()), 0);
  for (const auto& v : s.vertices())
    for (CurveId c : v) ++degree[static_cast<std::size_t>(c)];
  rep.g = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());

  auto cover = best_common_cover(s, budget);
  rep.h = cover.best;
  rep.witness_subset = std::move(cover.witness);
  rep.witness_curves = std::move(cover.witness_curves);
  rep.hypothesis_holds = rep.h < rep.n;

  rep.g_ge_h = rep.g >= rep.h;
  rep.binom_lhs = big_choose(rep.g, rep.alpha) * rep.h;
  rep.binom_margin = rep.binom_lhs - (rep.n - 1);
  rep.binom_ineq_holds = rep.binom_margin >= 0;
  return rep;
}

// ---------------------------------------------------------------------------
// Pair identity: sum_d l_d = C(n, 2).

struct PairIdentityReport {
  std::int64_t sum = 0;
  std::int64_t expected = 0;
  bool holds = false;
};

inline PairIdentityReport audit_pair_identity(const Stats& stats, int n) {
  PairIdentityReport rep;
  for (const auto& [d, count] : stats.ld) rep.sum += count;
  rep.expected = choose(n, 2);
  rep.holds = rep.sum == rep.expected;
  return rep;
}

// ---------------------------------------------------------------------------
// Dyadic window sums of l_d over [2^v * n^gamma, n / 2^v].

struct DyadicProfileParams {
  Rational gamma{0};
  int v = 0;
};

/// gamma = max(delta / epsilon, zeta), the exponent fed to the window.
inline Rational gamma_from(const Rational& delta, const Rational& epsilon,
                           const Rational& zeta) {
  Rational ratio = delta * Rational(epsilon.den(), epsilon.num());
  return std::max(ratio, zeta);
}

/// floor(n^(a/b)) for a/b in [0, 1), computed exactly.
inline std::int64_t floor_rational_power(std::int64_t n, const Rational& gamma) {
  if (gamma.num() < 0 || gamma >= Rational(1))
    throw std::invalid_argument("gamma must lie in [0, 1)");
  if (gamma.num() == 0 || n <= 1) return n <= 0 ? 0 : 1;
  const auto a = static_cast<unsigned>(gamma.num());
  const auto b = static_cast<unsigned>(gamma.den());
  BigInt target = boost::multiprecision::pow(BigInt(n), a);
  std::int64_t lo = 1, hi = n;  // n^(a/b) <= n since a < b
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (boost::multiprecision::pow(BigInt(mid), b) <= target)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

struct DyadicProfile {
  std::int64_t n_gamma = 0;  ///< floor(n^gamma)
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool empty_window = false;
  std::int64_t below = 0;
  std::int64_t middle = 0;
  std::int64_t above = 0;
  std::int64_t total() const { return below + middle + above; }
};

inline DyadicProfile dyadic_profile(const Stats& stats, const DyadicProfileParams& params) {
  if (params.v < 0) throw std::invalid_argument("v must be non-negative");
  DyadicProfile out;
  out.n_gamma = floor_rational_power(stats.n, params.gamma);

  constexpr std::int64_t kHuge = std::int64_t{1} << 62;
  const bool wide = params.v >= 62;
  const std::int64_t scale = wide ? kHuge : (std::int64_t{1} << params.v);
  out.lower = (wide || out.n_gamma > kHuge / scale) ? kHuge : scale * out.n_gamma;
  out.upper = wide ? 0 : stats.n / scale;
  out.empty_window = out.lower > out.upper;

  for (const auto& [d, count] : stats.ld) {
    if (d < out.lower)
      out.below += count;
    else if (d <= out.upper)
      out.middle += count;
    else
      out.above += count;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Complete-pencil / large-coverage / many-vertices classification.

enum class Branch { IsCompletePencil, LargeCoverage, ManyVertices };

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::IsCompletePencil: return "IsCompletePencil";
    case Branch::LargeCoverage: return "LargeCoverage";
    case Branch::ManyVertices: return "ManyVertices";
  }
  return "?";
}

struct DichotomyReport {
  Branch branch = Branch::ManyVertices;
  bool complete = false;
  bool large_coverage = false;
  Rational fraction{1};
  int coverage = 0;
  std::vector<std::size_t> coverage_witness;
  std::vector<CurveId> covered_curves;
  std::size_t vertex_count = 0;
  Rational vertices_per_curve{0};
};

inline DichotomyReport dichotomy_report(const IncidenceStructure& s, const Rational& fraction,
                                        unsigned long long budget = kDefaultSubsetBudget) {
  if (fraction <= Rational(0) || fraction > Rational(1))
    throw std::invalid_argument("fraction must lie in (0, 1]");
  require_valid(s);

  DichotomyReport rep;
  rep.fraction = fraction;
  auto cover = best_common_cover(s, budget);
  rep.coverage = cover.best;
  rep.coverage_witness = std::move(cover.witness);
  rep.covered_curves = std::move(cover.witness_curves);
  rep.vertex_count = s.vertex_count();
  rep.vertices_per_curve =
      Rational(static_cast<std::int64_t>(rep.vertex_count), std::max(s.n(), 1));

  // alpha vertices through every curve already cover each pair alpha times,
  // so any further vertex would break the axioms.
  rep.complete = rep.coverage == s.n() &&
                 rep.vertex_count == static_cast<std::size_t>(s.alpha());
  rep.large_coverage = Rational(rep.coverage) >= fraction * Rational(s.n());

  if (rep.complete)
    rep.branch = Branch::IsCompletePencil;
  else if (rep.large_coverage)
    rep.branch = Branch::LargeCoverage;
  else
    rep.branch = Branch::ManyVertices;
  return rep;
}

}  // namespace dirac

#endif  // DIRAC_BOUNDS_HPP
