#ifndef DIRAC_FIXTURES_HPP
#define DIRAC_FIXTURES_HPP

#include <stdexcept>
#include <vector>

#include "dirac/incidence.hpp"

namespace dirac {

namespace detail {
inline void require_fixture_size(int n) {
  if (n < 3) throw std::invalid_argument("fixture needs at least 3 curves");
}
}  // namespace detail

/// All n curves through a single point.
inline IncidenceStructure gen_pencil(int n) {
  detail::require_fixture_size(n);
  Vertex all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return IncidenceStructure(1, n, {all});
}

/// Curves 0..n-2 through one point, curve n-1 crossing each of them apart.
inline IncidenceStructure gen_near_pencil(int n) {
  detail::require_fixture_size(n);
  std::vector<Vertex> vertices;
  Vertex centre(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) centre[static_cast<std::size_t>(i)] = i;
  vertices.push_back(std::move(centre));
  for (int i = 0; i < n - 1; ++i) vertices.push_back({i, n - 1});
  return IncidenceStructure(1, n, std::move(vertices));
}

/// Every pair of curves meets at its own double point.
inline IncidenceStructure gen_simple_cyclic(int n) {
  detail::require_fixture_size(n);
  std::vector<Vertex> vertices;
  vertices.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) vertices.push_back({a, b});
  return IncidenceStructure(1, n, std::move(vertices));
}

}  // namespace dirac

#endif  // DIRAC_FIXTURES_HPP
