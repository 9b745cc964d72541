#ifndef DIRAC_KALEIDOSCOPE_HPP
#define DIRAC_KALEIDOSCOPE_HPP

// Dihedrally symmetric pseudoline arrangements presented by a single wedge.
//
// A wedge of angle pi/m is bounded by a bottom ray and a top ray meeting at
// the apex. Beams enter from infinity parallel to the bottom ray and bounce
// alternately off the top and bottom rays; after their last (terminating)
// bounce they retrace their path. Reflecting the wedge 2m times about the
// apex unfolds every beam into m pseudolines, the rays into m mirror lines,
// and adds the line at infinity.
//
// Everything here is combinatorial: a bounce point is a (side, rank) key with
// rank 1 farthest from the apex, and two chords inside the wedge cross iff
// their endpoints interleave on the boundary cycle.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "dirac/error.hpp"
#include "dirac/incidence.hpp"

namespace dirac {

enum class Side { Top, Bottom };

inline char side_char(Side s) { return s == Side::Top ? 'T' : 'B'; }

struct BounceEvent {
  Side side = Side::Top;
  std::int64_t rank = 1;
  friend auto operator<=>(const BounceEvent&, const BounceEvent&) = default;
};

struct BeamSpec {
  std::string name;
  /// The last event is the terminating bounce.
  std::vector<BounceEvent> events;
  friend bool operator==(const BeamSpec&, const BeamSpec&) = default;
};

struct WedgeSpec {
  int m = 2;
  std::vector<BeamSpec> beams;
  friend bool operator==(const WedgeSpec&, const WedgeSpec&) = default;
};

class ExpansionError : public Error {
 public:
  enum class Kind { InvalidWedge, SelfCrossingBeam, ValidationFailed, NonClosingBeam };

  ExpansionError(Kind kind, const std::string& detail, ValidationReport report = {})
      : Error(std::string(kind_name(kind)) + ": " + detail),
        kind_(kind),
        report_(std::move(report)) {}

  Kind kind() const noexcept { return kind_; }
  const ValidationReport& report() const noexcept { return report_; }

  static const char* kind_name(Kind k) noexcept {
    switch (k) {
      case Kind::InvalidWedge: return "InvalidWedge";
      case Kind::SelfCrossingBeam: return "SelfCrossingBeam";
      case Kind::ValidationFailed: return "ValidationFailed";
      case Kind::NonClosingBeam: return "NonClosingBeam";
    }
    return "?";
  }

 private:
  Kind kind_;
  ValidationReport report_;
};

/// Throws ExpansionError(InvalidWedge) unless m >= 2, beam names are unique,
/// every beam is nonempty, starts on the top side, alternates sides, uses
/// positive ranks, and never repeats one of its own bounce points.
inline void check_wedge(const WedgeSpec& w) {
  auto fail = [](const std::string& why) {
    throw ExpansionError(ExpansionError::Kind::InvalidWedge, why);
  };
  if (w.m < 2) fail("m must be at least 2");
  std::set<std::string> names;
  for (const auto& beam : w.beams) {
    if (beam.name.empty()) fail("beam with empty name");
    if (!names.insert(beam.name).second) fail("duplicate beam '" + beam.name + "'");
    if (beam.events.empty()) fail("beam '" + beam.name + "' has no events");
    std::set<BounceEvent> seen;
    for (std::size_t i = 0; i < beam.events.size(); ++i) {
      const auto& e = beam.events[i];
      const Side expected = i % 2 == 0 ? Side::Top : Side::Bottom;
      if (e.side != expected) fail("beam '" + beam.name + "' does not alternate from the top");
      if (e.rank < 1) fail("beam '" + beam.name + "' has a non-positive rank");
      if (!seen.insert(e).second)
        fail("beam '" + beam.name + "' visits the same bounce point twice");
    }
  }
}

// ---------------------------------------------------------------------------
// Provenance labels.

namespace label {
struct Mirror {
  int index;
  friend bool operator==(const Mirror&, const Mirror&) = default;
};
struct BeamCopy {
  std::string beam;
  int copy;
  friend bool operator==(const BeamCopy&, const BeamCopy&) = default;
};
struct LineAtInfinity {
  friend bool operator==(const LineAtInfinity&, const LineAtInfinity&) = default;
};

struct Apex {
  friend bool operator==(const Apex&, const Apex&) = default;
};
struct Bounce {
  int ray;
  Side side;
  std::int64_t rank;
  friend bool operator==(const Bounce&, const Bounce&) = default;
};
struct Crossing {
  int wedge;
  /// Segments as (beam index, segment index) in the folded wedge.
  std::pair<int, int> first;
  std::pair<int, int> second;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};
struct Ideal {
  int mirror;
  friend bool operator==(const Ideal&, const Ideal&) = default;
};
}  // namespace label

using LineLabel = std::variant<label::Mirror, label::BeamCopy, label::LineAtInfinity>;
using VertexLabel = std::variant<label::Apex, label::Bounce, label::Crossing, label::Ideal>;

/// One beam segment placed in one wedge image.
struct SegmentImage {
  int wedge;
  int segment;
  /// True when the pseudoline runs from the segment's outer end (ideal point
  /// or bounce s) to its inner end (bounce s+1).
  bool forward;
  friend bool operator==(const SegmentImage&, const SegmentImage&) = default;
};

struct ExpandedArrangement {
  IncidenceStructure structure{1, 0, {}};
  std::vector<LineLabel> line_labels;
  std::vector<VertexLabel> vertex_labels;
  /// Per curve id; empty for mirrors and the line at infinity. A beam copy is
  /// listed from one ideal end to the other.
  std::vector<std::vector<SegmentImage>> traces;
  int m = 2;
};

// ---------------------------------------------------------------------------
// Wedge image geometry on 2m rays. Wedge w lies between rays w and w+1; even
// wedges keep the original orientation, odd wedges are mirror images.

namespace detail {

struct Dihedral {
  int m;
  int rays() const { return 2 * m; }
  int wrap(int r) const { return ((r % rays()) + rays()) % rays(); }
  int bottom_ray(int w) const { return w % 2 == 0 ? w : wrap(w + 1); }
  int top_ray(int w) const { return w % 2 == 0 ? wrap(w + 1) : w; }
  int ray_of(int w, Side s) const { return s == Side::Bottom ? bottom_ray(w) : top_ray(w); }
  /// The other wedge bordering `ray`, which must border w.
  int across(int w, int ray) const { return ray == w ? wrap(w - 1) : wrap(w + 1); }
  int mirror_of_ray(int ray) const { return ray % m; }
};

/// Position of a boundary point on the wedge's boundary cycle: apex, bottom
/// ray outward, bottom ideal point, top ideal point, top ray inward.
using CyclePos = std::pair<int, std::int64_t>;

inline CyclePos cycle_pos(const BounceEvent& e) {
  return e.side == Side::Bottom ? CyclePos{1, -e.rank} : CyclePos{4, e.rank};
}
inline constexpr CyclePos kBottomIdeal{2, 0};

inline bool interleaves(CyclePos a, CyclePos b, CyclePos c, CyclePos d) {
  if (a == c || a == d || b == c || b == d) return false;
  if (b < a) std::swap(a, b);
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

struct Chord {
  int beam;
  int segment;
  CyclePos outer;
  CyclePos inner;
};

inline std::vector<Chord> chords(const WedgeSpec& w) {
  std::vector<Chord> out;
  for (int b = 0; b < static_cast<int>(w.beams.size()); ++b) {
    const auto& ev = w.beams[static_cast<std::size_t>(b)].events;
    for (int s = 0; s < static_cast<int>(ev.size()); ++s) {
      CyclePos outer = s == 0 ? kBottomIdeal : cycle_pos(ev[static_cast<std::size_t>(s - 1)]);
      out.push_back({b, s, outer, cycle_pos(ev[static_cast<std::size_t>(s)])});
    }
  }
  return out;
}

}  // namespace detail

/// Unfolds a wedge into the full arrangement and validates it as a 1-curve
/// combinatorics. Curves are numbered mirrors 0..m-1, the line at infinity m,
/// then beam copies beam by beam.
inline ExpandedArrangement expand(const WedgeSpec& w) {
  using Kind = ExpansionError::Kind;
  check_wedge(w);
  const detail::Dihedral dih{w.m};
  const int m = w.m;
  const int wedges = dih.rays();
  const int infinity = m;

  // Interior crossings of the folded wedge.
  const auto chord_list = detail::chords(w);
  std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs;
  for (std::size_t i = 0; i < chord_list.size(); ++i)
    for (std::size_t k = i + 1; k < chord_list.size(); ++k) {
      const auto& a = chord_list[i];
      const auto& b = chord_list[k];
      if (!detail::interleaves(a.outer, a.inner, b.outer, b.inner)) continue;
      if (a.beam == b.beam)
        throw ExpansionError(Kind::SelfCrossingBeam,
                             "beam '" + w.beams[static_cast<std::size_t>(a.beam)].name +
                                 "' segments " + std::to_string(a.segment) + " and " +
                                 std::to_string(b.segment) + " cross");
      crossing_pairs.emplace_back(i, k);
    }

  ExpandedArrangement out;
  out.m = m;
  for (int i = 0; i < m; ++i) out.line_labels.emplace_back(label::Mirror{i});
  out.line_labels.emplace_back(label::LineAtInfinity{});
  out.traces.resize(static_cast<std::size_t>(m) + 1);

  // copy_of[beam][wedge][segment] -> curve id.
  std::vector<std::vector<std::vector<int>>> copy_of(w.beams.size());
  // Curve ids through the ideal point of each mirror.
  std::vector<std::vector<int>> ideal_members(static_cast<std::size_t>(m));

  for (int b = 0; b < static_cast<int>(w.beams.size()); ++b) {
    const auto& beam = w.beams[static_cast<std::size_t>(b)];
    const int segments = static_cast<int>(beam.events.size());
    auto& owner = copy_of[static_cast<std::size_t>(b)];
    owner.assign(static_cast<std::size_t>(wedges),
                 std::vector<int>(static_cast<std::size_t>(segments), -1));

    // Atom ends: end 0 is the outer end, end 1 the inner end. Both ends of
    // every atom are glued to exactly one other end, so components are cycles.
    struct End {
      int wedge;
      int segment;
      int end;
    };
    auto partner = [&](int wedge, int s, int end) -> End {
      if (end == 1) {
        const int ray = dih.ray_of(wedge, beam.events[static_cast<std::size_t>(s)].side);
        const int other = dih.across(wedge, ray);
        if (s + 1 < segments) return {other, s + 1, 0};
        return {other, s, 1};  // retrace at the terminating bounce
      }
      if (s > 0) {
        const int ray = dih.ray_of(wedge, beam.events[static_cast<std::size_t>(s - 1)].side);
        return {dih.across(wedge, ray), s - 1, 1};
      }
      // Through infinity: arrive beside the opposite ray, on the other side.
      const int ray = dih.bottom_ray(wedge);
      const int opposite = dih.wrap(ray + m);
      const int other = wedge == ray ? dih.wrap(opposite - 1) : opposite;
      if (dih.bottom_ray(other) != opposite)
        throw ExpansionError(Kind::NonClosingBeam,
                             "beam '" + beam.name + "' cannot re-enter from infinity (m = " +
                                 std::to_string(m) + ")");
      return {other, 0, 0};
    };

    int copies = 0;
    for (int start = 0; start < wedges; ++start) {
      if (owner[static_cast<std::size_t>(start)][0] >= 0) continue;
      const int curve = static_cast<int>(out.line_labels.size());
      out.line_labels.emplace_back(label::BeamCopy{beam.name, copies++});
      std::vector<SegmentImage> trace;
      int ideal_crossings = 0;

      // Enter (start, 0) through its outer end, right after infinity.
      End cur{start, 0, 0};
      do {
        auto& slot = owner[static_cast<std::size_t>(cur.wedge)][static_cast<std::size_t>(cur.segment)];
        if (slot >= 0)
          throw ExpansionError(Kind::NonClosingBeam,
                               "beam '" + beam.name + "' revisits a segment image");
        slot = curve;
        trace.push_back({cur.wedge, cur.segment, cur.end == 0});
        const End exit = partner(cur.wedge, cur.segment, 1 - cur.end);
        if (cur.segment == 0 && exit.segment == 0 && cur.end == 1 && exit.end == 0) {
          ++ideal_crossings;
          ideal_members[static_cast<std::size_t>(
                            dih.mirror_of_ray(dih.bottom_ray(cur.wedge)))]
              .push_back(curve);
        }
        cur = exit;
      } while (!(cur.wedge == start && cur.segment == 0 && cur.end == 0));

      if (ideal_crossings != 1)
        throw ExpansionError(Kind::NonClosingBeam,
                             "a copy of beam '" + beam.name + "' meets infinity " +
                                 std::to_string(ideal_crossings) + " times");
      out.traces.push_back(std::move(trace));
    }
  }
  const int n = static_cast<int>(out.line_labels.size());

  // Vertices keyed by provenance, merged by geometric point.
  std::vector<std::pair<Vertex, VertexLabel>> labelled;
  {
    Vertex apex(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) apex[static_cast<std::size_t>(i)] = i;
    labelled.emplace_back(std::move(apex), label::Apex{});
  }
  for (int i = 0; i < m; ++i) {
    Vertex v{i, infinity};
    for (int c : ideal_members[static_cast<std::size_t>(i)]) v.push_back(c);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    labelled.emplace_back(std::move(v), label::Ideal{i});
  }

  std::map<std::tuple<int, Side, std::int64_t>, std::set<int>> bounces;
  for (int b = 0; b < static_cast<int>(w.beams.size()); ++b) {
    const auto& ev = w.beams[static_cast<std::size_t>(b)].events;
    for (int wedge = 0; wedge < wedges; ++wedge)
      for (int s = 0; s < static_cast<int>(ev.size()); ++s) {
        const auto& e = ev[static_cast<std::size_t>(s)];
        const int ray = dih.ray_of(wedge, e.side);
        auto& members = bounces[{ray, e.side, e.rank}];
        members.insert(dih.mirror_of_ray(ray));
        members.insert(copy_of[static_cast<std::size_t>(b)][static_cast<std::size_t>(wedge)]
                              [static_cast<std::size_t>(s)]);
      }
  }
  for (const auto& [key, members] : bounces) {
    const auto& [ray, side, rank] = key;
    labelled.emplace_back(Vertex(members.begin(), members.end()),
                          label::Bounce{ray, side, rank});
  }

  for (int wedge = 0; wedge < wedges; ++wedge)
    for (const auto& [i, k] : crossing_pairs) {
      const auto& a = chord_list[i];
      const auto& b = chord_list[k];
      const int ca = copy_of[static_cast<std::size_t>(a.beam)][static_cast<std::size_t>(wedge)]
                            [static_cast<std::size_t>(a.segment)];
      const int cb = copy_of[static_cast<std::size_t>(b.beam)][static_cast<std::size_t>(wedge)]
                            [static_cast<std::size_t>(b.segment)];
      labelled.emplace_back(Vertex{std::min(ca, cb), std::max(ca, cb)},
                            label::Crossing{wedge, {a.beam, a.segment}, {b.beam, b.segment}});
    }

  std::stable_sort(labelled.begin(), labelled.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Vertex> vertices;
  vertices.reserve(labelled.size());
  for (auto& [v, lab] : labelled) {
    vertices.push_back(v);
    out.vertex_labels.push_back(lab);
  }
  out.structure = IncidenceStructure(1, n, std::move(vertices));

  auto report = validate(out.structure);
  if (!report.valid()) {
    const std::string detail = std::to_string(report.violations.size()) +
                               " violation(s), first: " + describe(report.violations.front());
    throw ExpansionError(Kind::ValidationFailed, detail, std::move(report));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The counterexample family: m = 6j + 2, red and blue beams of 3j + 1 bounces
// each, with blue bounce 3i landing on red bounce i for i <= j.

namespace detail {

struct FamilyPoint {
  char beam;  // 'r' or 'b'
  int index;  // 1-based bounce number
  friend bool operator==(const FamilyPoint&, const FamilyPoint&) = default;
};

inline Side family_side(int bounce) { return bounce % 2 == 1 ? Side::Top : Side::Bottom; }

}  // namespace detail

/// Wedge of the j-th member of the family.
///
/// Each side of the wedge is kept as a list of bounce points ordered from
/// infinity toward the apex. The j = 1 ordering is fixed; each later step
/// appends three red bounces nearest the apex and slots the two new blue
/// bounces immediately outside red bounce j + 1. Ranks are positions in the
/// final lists.
inline WedgeSpec family_wedge(int j) {
  if (j < 1) throw std::invalid_argument("family index j must be at least 1");
  using detail::FamilyPoint;
  using detail::family_side;

  std::vector<FamilyPoint> top = {{'b', 1}, {'r', 1}, {'r', 3}};
  std::vector<FamilyPoint> bottom = {{'b', 2}, {'b', 4}, {'r', 2}, {'r', 4}};
  auto side_list = [&](int bounce) -> std::vector<FamilyPoint>& {
    return family_side(bounce) == Side::Top ? top : bottom;
  };

  for (int step = 2; step <= j; ++step) {
    for (int k = 3 * step - 1; k <= 3 * step + 1; ++k) side_list(k).push_back({'r', k});
    auto& list = side_list(step + 1);
    auto anchor = std::find(list.begin(), list.end(), FamilyPoint{'r', step + 1});
    list.insert(anchor, {{'b', 3 * step - 1}, {'b', 3 * step + 1}});
  }

  auto rank_of = [&](FamilyPoint p, int bounce) -> std::int64_t {
    const auto& list = side_list(bounce);
    auto it = std::find(list.begin(), list.end(), p);
    return static_cast<std::int64_t>(it - list.begin()) + 1;
  };

  const int events = 3 * j + 1;
  WedgeSpec w;
  w.m = 6 * j + 2;
  BeamSpec red{"red", {}};
  BeamSpec blue{"blue", {}};
  for (int k = 1; k <= events; ++k) {
    red.events.push_back({family_side(k), rank_of({'r', k}, k)});
    const FamilyPoint bp = (k % 3 == 0 && k / 3 <= j) ? FamilyPoint{'r', k / 3}
                                                      : FamilyPoint{'b', k};
    blue.events.push_back({family_side(k), rank_of(bp, k)});
  }
  w.beams = {std::move(red), std::move(blue)};
  return w;
}

}  // namespace dirac

#endif  // DIRAC_KALEIDOSCOPE_HPP
