#ifndef DIRAC_RENDER_HPP
#define DIRAC_RENDER_HPP

// SVG drawings of a wedge and of its unfolded arrangement. Radii are for
// presentation only: bounce rank k is drawn at radius R * rho^k, the line at
// infinity is the bounding circle.

#include <cmath>
#include <iomanip>
#include <iterator>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dirac/kaleidoscope.hpp"
#include "dirac/rational.hpp"

namespace dirac {

struct RenderOptions {
  double canvas = 300.0;
  Rational radius{100};
  Rational ratio{4, 5};
  bool show_labels = false;
  bool show_vertices = false;
  /// Stroke colour overrides keyed by CSS class: "mirror", "infinity",
  /// "beam-<name>".
  std::map<std::string, std::string> stroke;
};

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.num()) / static_cast<double>(r.den());
}

struct Point {
  double x;
  double y;
};

class Canvas {
 public:
  Canvas(const WedgeSpec& w, const RenderOptions& opts) : w_(w), opts_(opts) {
    if (opts.radius <= Rational(0)) throw std::invalid_argument("render radius must be positive");
    if (opts.ratio <= Rational(0) || opts.ratio >= Rational(1))
      throw std::invalid_argument("render ratio must lie strictly between 0 and 1");
    if (!(opts.canvas > 0)) throw std::invalid_argument("canvas size must be positive");
    R_ = to_double(opts.radius);
    rho_ = to_double(opts.ratio);
    outer_ = 1.25 * R_;
    scale_ = (opts.canvas / 2.0 - 10.0) / outer_;
    half_angle_ = std::numbers::pi / w.m;
    check_rank_order();
  }

  double wedge_angle() const { return half_angle_; }
  double outer() const { return outer_; }

  std::string fmt(double v) const {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << (std::abs(v) < 5e-4 ? 0.0 : v);
    return os.str();
  }

  Point to_screen(double r, double angle) const {
    const double c = opts_.canvas / 2.0;
    return {c + scale_ * r * std::cos(angle), c - scale_ * r * std::sin(angle)};
  }

  double rank_radius(std::int64_t rank) const {
    return R_ * std::pow(rho_, static_cast<double>(rank));
  }

  /// Folded polar coordinates of a bounce point.
  std::pair<double, double> bounce_polar(const BounceEvent& e) const {
    return {rank_radius(e.rank), e.side == Side::Top ? half_angle_ : 0.0};
  }

  /// Folded polar coordinates where beam b enters from infinity.
  std::pair<double, double> entry_polar(std::size_t beam) const {
    const double offset = outer_ * std::tan(half_angle_) * 0.12 *
                          static_cast<double>(beam + 1) /
                          static_cast<double>(w_.beams.size() + 1);
    return {std::hypot(outer_, offset), std::atan2(offset, outer_)};
  }

  /// Angle of folded angle phi inside wedge image w.
  double unfold(int wedge, double phi) const {
    return wedge % 2 == 0 ? wedge * half_angle_ + phi : (wedge + 1) * half_angle_ - phi;
  }

  std::string points(const std::vector<Point>& pts) const {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ' ';
      out += fmt(pts[i].x) + "," + fmt(pts[i].y);
    }
    return out;
  }

  std::string header() const {
    std::ostringstream os;
    const std::string size = fmt(opts_.canvas);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
       << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
       << "<style>\n"
       << "  polyline, path { fill: none; stroke-width: 1; }\n"
       << "  ." << "mirror { stroke: " << colour("mirror", "#555555") << "; }\n"
       << "  .infinity { stroke: " << colour("infinity", "#000000") << "; }\n";
    static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b"};
    for (std::size_t b = 0; b < w_.beams.size(); ++b) {
      const std::string cls = "beam-" + w_.beams[b].name;
      os << "  ." << xml_escape(css_ident(cls)) << " { stroke: "
         << colour(cls, palette[b % std::size(palette)]) << "; }\n";
    }
    os << "  circle.vertex { fill: #000000; stroke: none; }\n"
       << "  text { font-family: sans-serif; font-size: 8px; }\n"
       << "</style>\n";
    return os.str();
  }

  static std::string css_ident(const std::string& s) {
    std::string out;
    for (char c : s) {
      const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '-' || c == '_';
      out += ok ? c : '_';
    }
    return out;
  }

 private:
  std::string colour(const std::string& cls, const std::string& fallback) const {
    auto it = opts_.stroke.find(cls);
    return xml_escape(it == opts_.stroke.end() ? fallback : it->second);
  }

  // Drawn radii must keep the combinatorial rank order on each side.
  void check_rank_order() const {
    for (Side side : {Side::Top, Side::Bottom}) {
      std::set<std::int64_t> ranks;
      for (const auto& beam : w_.beams)
        for (const auto& e : beam.events)
          if (e.side == side) ranks.insert(e.rank);
      double previous = 0;
      bool first = true;
      for (auto rank : ranks) {
        const double drawn = std::stod(fmt(scale_ * rank_radius(rank)));
        if (!first && !(drawn < previous))
          throw std::runtime_error("drawn radii collapse at rank " + std::to_string(rank) +
                                   "; use a larger ratio");
        previous = drawn;
        first = false;
      }
    }
  }

  const WedgeSpec& w_;
  const RenderOptions& opts_;
  double R_ = 100;
  double rho_ = 0.8;
  double outer_ = 125;
  double scale_ = 1;
  double half_angle_ = 0;
};

}  // namespace detail

/// Two mirror rays as <path> elements and one <polyline> per beam.
inline std::string render_wedge(const WedgeSpec& w, const RenderOptions& opts = {}) {
  check_wedge(w);
  detail::Canvas cv(w, opts);
  std::ostringstream os;
  os << cv.header();

  const auto apex = cv.to_screen(0, 0);
  for (double angle : {0.0, cv.wedge_angle()}) {
    const auto end = cv.to_screen(cv.outer(), angle);
    os << "<path class=\"mirror\" d=\"M " << cv.fmt(apex.x) << " " << cv.fmt(apex.y) << " L "
       << cv.fmt(end.x) << " " << cv.fmt(end.y) << "\"/>\n";
  }

  std::set<BounceEvent> drawn;
  std::ostringstream markers;
  for (std::size_t b = 0; b < w.beams.size(); ++b) {
    const auto& beam = w.beams[b];
    std::vector<detail::Point> pts;
    auto [r0, a0] = cv.entry_polar(b);
    pts.push_back(cv.to_screen(r0, a0));
    for (const auto& e : beam.events) {
      auto [r, a] = cv.bounce_polar(e);
      pts.push_back(cv.to_screen(r, a));
      if (drawn.insert(e).second) {
        markers << "<circle class=\"vertex\" cx=\"" << cv.fmt(pts.back().x) << "\" cy=\""
                << cv.fmt(pts.back().y) << "\" r=\"1.5\"/>\n";
        if (opts.show_labels)
          markers << "<text x=\"" << cv.fmt(pts.back().x + 3) << "\" y=\""
                  << cv.fmt(pts.back().y - 3) << "\">" << side_char(e.side) << e.rank
                  << "</text>\n";
      }
    }
    os << "<polyline class=\""
       << detail::xml_escape(detail::Canvas::css_ident("beam-" + beam.name))
       << "\" points=\"" << cv.points(pts) << "\"/>\n";
  }
  os << markers.str() << "</svg>\n";
  return os.str();
}

/// The unfolded arrangement: one <polyline> per curve, mirrors as diameters
/// and the line at infinity as the bounding circle.
inline std::string render_arrangement(const WedgeSpec& w, const RenderOptions& opts = {}) {
  const auto arr = expand(w);
  detail::Canvas cv(w, opts);
  std::ostringstream os;
  os << cv.header();

  // The line at infinity is the bounding circle, drawn as a closed polyline
  // so that every curve is one polyline element.
  const auto centre = cv.to_screen(0, 0);
  {
    constexpr int kSteps = 96;
    std::vector<detail::Point> ring;
    for (int i = 0; i <= kSteps; ++i)
      ring.push_back(cv.to_screen(cv.outer(), 2.0 * std::numbers::pi * (i % kSteps) / kSteps));
    os << "<polyline class=\"infinity\" data-curve=\"" << arr.m << "\" points=\""
       << cv.points(ring) << "\"/>\n";
  }

  for (std::size_t curve = 0; curve < arr.line_labels.size(); ++curve) {
    const auto& lab = arr.line_labels[curve];
    if (const auto* mirror = std::get_if<label::Mirror>(&lab)) {
      const double angle = mirror->index * cv.wedge_angle();
      std::vector<detail::Point> pts{cv.to_screen(cv.outer(), angle),
                                     cv.to_screen(cv.outer(), angle + std::numbers::pi)};
      os << "<polyline class=\"mirror\" data-curve=\"" << curve << "\" points=\""
         << cv.points(pts) << "\"/>\n";
      continue;
    }
    const auto* copy = std::get_if<label::BeamCopy>(&lab);
    if (!copy) continue;

    std::size_t beam_index = 0;
    while (w.beams[beam_index].name != copy->beam) ++beam_index;
    const auto& events = w.beams[beam_index].events;
    auto end_polar = [&](int segment, bool inner) {
      if (inner) return cv.bounce_polar(events[static_cast<std::size_t>(segment)]);
      if (segment == 0) return cv.entry_polar(beam_index);
      return cv.bounce_polar(events[static_cast<std::size_t>(segment - 1)]);
    };

    std::vector<detail::Point> pts;
    const auto& trace = arr.traces[curve];
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const auto& img = trace[i];
      if (i == 0) {
        auto [r, phi] = end_polar(img.segment, !img.forward);
        pts.push_back(cv.to_screen(r, cv.unfold(img.wedge, phi)));
      }
      auto [r, phi] = end_polar(img.segment, img.forward);
      pts.push_back(cv.to_screen(r, cv.unfold(img.wedge, phi)));
    }
    os << "<polyline class=\""
       << detail::xml_escape(detail::Canvas::css_ident("beam-" + copy->beam))
       << "\" data-curve=\"" << curve << "\" points=\"" << cv.points(pts) << "\"/>\n";
  }

  if (opts.show_vertices) {
    os << "<circle class=\"vertex\" cx=\"" << cv.fmt(centre.x) << "\" cy=\"" << cv.fmt(centre.y)
       << "\" r=\"1.5\"/>\n";
    for (const auto& vl : arr.vertex_labels)
      if (const auto* b = std::get_if<label::Bounce>(&vl)) {
        const double r = cv.rank_radius(b->rank);
        const auto pt = cv.to_screen(r, b->ray * cv.wedge_angle());
        os << "<circle class=\"vertex\" cx=\"" << cv.fmt(pt.x) << "\" cy=\"" << cv.fmt(pt.y)
           << "\" r=\"1.5\"/>\n";
      }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dirac

#endif  // DIRAC_RENDER_HPP
