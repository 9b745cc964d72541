#ifndef DIRAC_STATS_HPP
#define DIRAC_STATS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "dirac/incidence.hpp"

namespace dirac {

struct Stats {
  int alpha = 1;
  int n = 0;
  /// t_k: vertices of degree exactly k.
  std::map<int, std::int64_t> tk;
  /// r: most vertices on any single curve.
  int r = 0;
  std::vector<int> curve_degrees;
  std::vector<int> vertex_degrees;
  /// l_d: curve pairs whose common vertices have minimum degree d.
  std::map<int, std::int64_t> ld;

  friend bool operator==(const Stats&, const Stats&) = default;
};

inline Stats compute_stats(const IncidenceStructure& s) {
  require_valid(s);

  Stats st;
  st.alpha = s.alpha();
  st.n = s.n();
  const auto n = static_cast<std::size_t>(s.n());
  st.curve_degrees.assign(n, 0);
  st.vertex_degrees.reserve(s.vertex_count());

  for (const auto& v : s.vertices()) {
    const int k = static_cast<int>(v.size());
    st.vertex_degrees.push_back(k);
    ++st.tk[k];
    for (CurveId c : v) ++st.curve_degrees[static_cast<std::size_t>(c)];
  }
  st.r = st.curve_degrees.empty()
             ? 0
             : *std::max_element(st.curve_degrees.begin(), st.curve_degrees.end());

  if (s.alpha() == 1) {
    // Each pair has a single common vertex, so a degree-k vertex accounts
    // for C(k,2) pairs at d = k.
    for (const auto& [k, count] : st.tk)
      st.ld[k] += count * (static_cast<std::int64_t>(k) * (k - 1) / 2);
  } else {
    std::vector<int> min_degree(n * n, std::numeric_limits<int>::max());
    for (const auto& v : s.vertices()) {
      const int k = static_cast<int>(v.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          int& slot = min_degree[static_cast<std::size_t>(v[i]) * n +
                                 static_cast<std::size_t>(v[j])];
          slot = std::min(slot, k);
        }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) ++st.ld[min_degree[a * n + b]];
  }
  return st;
}

}  // namespace dirac

#endif  // DIRAC_STATS_HPP
