#ifndef DIRAC_FINITE_PLANE_HPP
#define DIRAC_FINITE_PLANE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirac/error.hpp"
#include "dirac/incidence.hpp"

namespace dirac {

using Homogeneous = std::array<int, 3>;

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// The projective plane over the integers mod p. Points and lines share the
/// same canonical triples (last nonzero coordinate equal to 1) in
/// lexicographic order; point x lies on line l iff x . l == 0 (mod p).
class ProjectivePlane {
 public:
  explicit ProjectivePlane(int p) : p_(p) {
    if (!is_prime(p)) throw NotPrime(p);
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y)
        for (int z = 0; z < p; ++z) {
          const Homogeneous t{x, y, z};
          const int last = z != 0 ? z : (y != 0 ? y : x);
          if (last == 1) triples_.push_back(t);
        }
    points_on_line_.resize(triples_.size());
    for (std::size_t l = 0; l < triples_.size(); ++l)
      for (std::size_t q = 0; q < triples_.size(); ++q)
        if (incident(q, l)) points_on_line_[l].push_back(static_cast<int>(q));
  }

  int p() const noexcept { return p_; }
  std::size_t size() const noexcept { return triples_.size(); }
  std::span<const Homogeneous> points() const noexcept { return triples_; }
  std::span<const Homogeneous> lines() const noexcept { return triples_; }

  bool incident(std::size_t point, std::size_t line) const {
    const auto& a = triples_[point];
    const auto& b = triples_[line];
    const long long dot = static_cast<long long>(a[0]) * b[0] +
                          static_cast<long long>(a[1]) * b[1] +
                          static_cast<long long>(a[2]) * b[2];
    return dot % p_ == 0;
  }

  std::span<const int> points_on(std::size_t line) const { return points_on_line_.at(line); }

 private:
  int p_;
  std::vector<Homogeneous> triples_;
  std::vector<std::vector<int>> points_on_line_;
};

inline ProjectivePlane pg2(int p) { return ProjectivePlane(p); }

class DuplicateLineId : public Error {
 public:
  explicit DuplicateLineId(int id)
      : Error("line id " + std::to_string(id) + " selected twice"), id_(id) {}
  int id() const noexcept { return id_; }

 private:
  int id_;
};

/// Curve i of the result is the i-th selected line; vertices are the points
/// on at least two selected lines. With `dedupe`, repeated ids are dropped
/// (first occurrence kept) instead of rejected.
inline IncidenceStructure structure_from_lines(const ProjectivePlane& plane,
                                               std::span<const int> line_ids,
                                               bool dedupe = false) {
  std::vector<int> chosen;
  std::vector<char> seen(plane.size(), 0);
  for (int id : line_ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= plane.size())
      throw std::out_of_range("line id " + std::to_string(id) + " not in plane");
    if (seen[static_cast<std::size_t>(id)]) {
      if (dedupe) continue;
      throw DuplicateLineId(id);
    }
    seen[static_cast<std::size_t>(id)] = 1;
    chosen.push_back(id);
  }
  if (chosen.size() < 2) throw std::invalid_argument("need at least two distinct lines");

  std::vector<Vertex> through(plane.size());
  for (std::size_t c = 0; c < chosen.size(); ++c)
    for (int q : plane.points_on(static_cast<std::size_t>(chosen[c])))
      through[static_cast<std::size_t>(q)].push_back(static_cast<CurveId>(c));

  std::vector<Vertex> vertices;
  for (auto& v : through)
    if (v.size() >= 2) vertices.push_back(std::move(v));
  return IncidenceStructure(1, static_cast<int>(chosen.size()), std::move(vertices));
}

/// splitmix64: state += 0x9E3779B97F4A7C15, then the output is the state
/// passed through two xor-shift-multiply rounds and a final xor-shift.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// n distinct line ids, ascending. Drawn by a partial Fisher-Yates shuffle of
/// 0..N-1 where position i swaps with i + next() % (N - i).
inline std::vector<int> sample_lines(const ProjectivePlane& plane, int n, std::uint64_t seed) {
  const auto total = plane.size();
  if (n < 0 || static_cast<std::size_t>(n) > total)
    throw std::invalid_argument("cannot sample " + std::to_string(n) + " of " +
                                std::to_string(total) + " lines");
  std::vector<int> ids(total);
  std::iota(ids.begin(), ids.end(), 0);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.next() % (total - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(static_cast<std::size_t>(n));
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace dirac

#endif  // DIRAC_FINITE_PLANE_HPP
