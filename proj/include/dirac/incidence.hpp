#ifndef DIRAC_INCIDENCE_HPP
#define DIRAC_INCIDENCE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dirac/error.hpp"

namespace dirac {

using CurveId = int;
using Vertex = std::vector<CurveId>;

/// Unordered incidence combinatorics of n curves: every vertex is the set of
/// curves through one intersection point. Vertices are stored sorted
/// lexicographically and each vertex is sorted ascending, so two structures
/// describing the same combinatorics compare equal.
///
/// Construction only enforces what makes the data well formed (ids in range,
/// no repeated id inside a vertex). Axiom violations such as a pair covered
/// twice are left in place for validate() to report.
class IncidenceStructure {
 public:
  IncidenceStructure(int alpha, int n, std::vector<Vertex> vertices)
      : alpha_(alpha), n_(n), vertices_(std::move(vertices)) {
    if (alpha_ < 1) throw std::invalid_argument("alpha must be positive");
    if (n_ < 0) throw std::invalid_argument("curve count must be non-negative");
    for (auto& v : vertices_) {
      std::sort(v.begin(), v.end());
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= n_)
          throw std::invalid_argument("curve id " + std::to_string(v[i]) +
                                      " out of range");
        if (i > 0 && v[i] == v[i - 1])
          throw std::invalid_argument("curve id " + std::to_string(v[i]) +
                                      " repeated in a vertex");
      }
    }
    std::sort(vertices_.begin(), vertices_.end());
  }

  int alpha() const noexcept { return alpha_; }
  int n() const noexcept { return n_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

 private:
  int alpha_;
  int n_;
  std::vector<Vertex> vertices_;
};

namespace violation {

struct PairMultiplicity {
  CurveId a;
  CurveId b;
  int observed;
  friend bool operator==(const PairMultiplicity&, const PairMultiplicity&) = default;
};
struct DuplicateVertex {
  std::size_t first;
  std::size_t second;
  friend bool operator==(const DuplicateVertex&, const DuplicateVertex&) = default;
};
struct Disconnected {
  int components;
  friend bool operator==(const Disconnected&, const Disconnected&) = default;
};
struct SmallVertex {
  std::size_t index;
  friend bool operator==(const SmallVertex&, const SmallVertex&) = default;
};
struct UnusedCurve {
  CurveId id;
  friend bool operator==(const UnusedCurve&, const UnusedCurve&) = default;
};

}  // namespace violation

using Violation = std::variant<violation::PairMultiplicity, violation::DuplicateVertex,
                               violation::Disconnected, violation::SmallVertex,
                               violation::UnusedCurve>;

inline std::string describe(const Violation& v) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, violation::PairMultiplicity>) {
          os << "PairMultiplicity (" << x.a << "," << x.b << ") " << x.observed;
        } else if constexpr (std::is_same_v<T, violation::DuplicateVertex>) {
          os << "DuplicateVertex " << x.first << " " << x.second;
        } else if constexpr (std::is_same_v<T, violation::Disconnected>) {
          os << "Disconnected " << x.components;
        } else if constexpr (std::is_same_v<T, violation::SmallVertex>) {
          os << "SmallVertex " << x.index;
        } else {
          os << "UnusedCurve " << x.id;
        }
      },
      v);
  return os.str();
}

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
};

/// Checks every axiom of an alpha-curve combinatorics. Violations are listed
/// in a fixed order: small vertices, duplicate vertices, unused curves, pair
/// multiplicities (by pair), then connectivity.
inline ValidationReport validate(const IncidenceStructure& s) {
  ValidationReport report;
  const int n = s.n();
  const auto& verts = s.vertices();

  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i].size() < 2) report.violations.emplace_back(violation::SmallVertex{i});

  // Vertices are sorted, so equal id sets are adjacent.
  for (std::size_t i = 1; i < verts.size(); ++i)
    if (verts[i] == verts[i - 1])
      report.violations.emplace_back(violation::DuplicateVertex{i - 1, i});

  std::vector<int> used(static_cast<std::size_t>(n), 0);
  for (const auto& v : verts)
    for (CurveId c : v) used[static_cast<std::size_t>(c)] = 1;
  for (int c = 0; c < n; ++c)
    if (!used[static_cast<std::size_t>(c)])
      report.violations.emplace_back(violation::UnusedCurve{c});

  std::vector<int> pairs(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& v : verts)
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        ++pairs[static_cast<std::size_t>(v[i]) * n + static_cast<std::size_t>(v[j])];
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int seen = pairs[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
      if (seen != s.alpha())
        report.violations.emplace_back(violation::PairMultiplicity{a, b, seen});
    }

  // Union-find over curves; vertex nodes are folded into their first curve.
  // A vertex without curves is its own component.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int empty_vertices = 0;
  for (const auto& v : verts) {
    if (v.empty()) {
      ++empty_vertices;
      continue;
    }
    for (std::size_t i = 1; i < v.size(); ++i)
      parent[static_cast<std::size_t>(find(v[i]))] = find(v[0]);
  }
  int components = empty_vertices;
  for (int c = 0; c < n; ++c)
    if (find(c) == c) ++components;
  if (components > 1) report.violations.emplace_back(violation::Disconnected{components});

  return report;
}

/// Thrown by operations that require a valid structure.
class InvalidStructure : public Error {
 public:
  explicit InvalidStructure(ValidationReport report)
      : Error(summary(report)), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  static std::string summary(const ValidationReport& r) {
    std::string out = "invalid structure: " + std::to_string(r.violations.size()) +
                      " violation(s)";
    if (!r.violations.empty()) out += ", first: " + describe(r.violations.front());
    return out;
  }
  ValidationReport report_;
};

inline void require_valid(const IncidenceStructure& s) {
  auto report = validate(s);
  if (!report.valid()) throw InvalidStructure(std::move(report));
}

}  // namespace dirac

#endif  // DIRAC_INCIDENCE_HPP
