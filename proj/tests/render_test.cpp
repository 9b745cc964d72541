#include <cmath>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "dirac/render.hpp"
#include "oracles.hpp"

namespace dirac {
namespace {

std::size_t count(const std::string& doc, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = doc.find(needle); pos != std::string::npos; pos = doc.find(needle, pos + 1)) ++n;
  return n;
}

/// Point lists of every polyline with the given class.
std::vector<std::vector<std::pair<double, double>>> polylines(const std::string& doc,
                                                               const std::string& cls) {
  std::vector<std::vector<std::pair<double, double>>> out;
  const std::regex re("<polyline class=\"" + cls + "\"[^>]*points=\"([^\"]*)\"");
  for (auto it = std::sregex_iterator(doc.begin(), doc.end(), re); it != std::sregex_iterator();
       ++it) {
    std::istringstream in((*it)[1].str());
    std::vector<std::pair<double, double>> pts;
    double x, y;
    char comma;
    while (in >> x >> comma >> y) pts.emplace_back(x, y);
    out.push_back(std::move(pts));
  }
  return out;
}

TEST(RenderWedge, FamilyBaseCase) {
  const auto svg = render_wedge(family_wedge(1));
  EXPECT_TRUE(oracle::well_formed_xml(svg));
  EXPECT_EQ(count(svg, "<path "), 2u);
  EXPECT_EQ(count(svg, "<polyline "), 2u);
  // 3 top points and 4 bottom points; b3 shares r1's marker.
  EXPECT_EQ(count(svg, "<circle "), 7u);
  EXPECT_EQ(count(svg, "<text"), 0u);
  const auto red = polylines(svg, "beam-red");
  ASSERT_EQ(red.size(), 1u);
  EXPECT_EQ(red[0].size(), 5u);  // entry plus four bounces
}

TEST(RenderWedge, EmptyWedgeDrawsRays) {
  const auto svg = render_wedge(WedgeSpec{2, {}});
  EXPECT_TRUE(oracle::well_formed_xml(svg));
  EXPECT_EQ(count(svg, "<path "), 2u);
  EXPECT_EQ(count(svg, "<polyline "), 0u);
}

TEST(RenderWedge, LabelsAndStrokes) {
  RenderOptions opts;
  opts.show_labels = true;
  opts.stroke["beam-red"] = "#123456";
  const auto svg = render_wedge(family_wedge(1), opts);
  EXPECT_TRUE(oracle::well_formed_xml(svg));
  EXPECT_EQ(count(svg, "<text"), 7u);
  EXPECT_NE(svg.find(".beam-red { stroke: #123456; }"), std::string::npos);
}

TEST(RenderWedge, OddBeamNamesStayWellFormed) {
  WedgeSpec w{4, {{"a&b<c>", {{Side::Top, 1}}}}};
  const auto svg = render_wedge(w);
  EXPECT_TRUE(oracle::well_formed_xml(svg));
  EXPECT_NE(svg.find("beam-a_b_c_"), std::string::npos);
}

TEST(RenderWedge, RejectsBadOptions) {
  RenderOptions opts;
  opts.ratio = Rational(1);
  EXPECT_THROW(render_wedge(family_wedge(1), opts), std::invalid_argument);
  opts.ratio = Rational(4, 5);
  opts.canvas = 0;
  EXPECT_THROW(render_wedge(family_wedge(1), opts), std::invalid_argument);
  // Radii this small round to the same drawn value.
  RenderOptions tight;
  tight.ratio = Rational(1, 1000);
  EXPECT_THROW(render_wedge(family_wedge(1), tight), std::runtime_error);
}

TEST(RenderArrangement, PolylineCountEqualsCurves) {
  for (int j : {1, 2, 3}) {
    const auto svg = render_arrangement(family_wedge(j));
    EXPECT_TRUE(oracle::well_formed_xml(svg)) << j;
    EXPECT_EQ(count(svg, "<polyline "), static_cast<std::size_t>(18 * j + 7)) << j;
  }
  const auto empty = render_arrangement(WedgeSpec{2, {}});
  EXPECT_EQ(count(empty, "<polyline "), 3u);
}

TEST(RenderArrangement, Geometry) {
  const RenderOptions opts;
  const auto svg = render_arrangement(family_wedge(1), opts);
  const double c = opts.canvas / 2.0;
  const double outer = c - 10.0;
  auto dist = [c](std::pair<double, double> p) { return std::hypot(p.first - c, p.second - c); };

  const auto ring = polylines(svg, "infinity");
  ASSERT_EQ(ring.size(), 1u);
  EXPECT_EQ(ring[0].front(), ring[0].back());
  for (auto p : ring[0]) EXPECT_NEAR(dist(p), outer, 2e-3);

  const auto mirrors = polylines(svg, "mirror");
  ASSERT_EQ(mirrors.size(), 8u);
  for (const auto& m : mirrors) {
    ASSERT_EQ(m.size(), 2u);
    EXPECT_NEAR((m[0].first + m[1].first) / 2, c, 2e-3);
    EXPECT_NEAR((m[0].second + m[1].second) / 2, c, 2e-3);
  }

  // Beam copies start and end out at infinity and stay on the canvas.
  for (const char* cls : {"beam-red", "beam-blue"}) {
    const auto copies = polylines(svg, cls);
    ASSERT_EQ(copies.size(), 8u);
    for (const auto& pts : copies) {
      EXPECT_EQ(pts.size(), 9u);  // two passes of four segments
      EXPECT_GE(dist(pts.front()), outer - 1e-3);
      EXPECT_GE(dist(pts.back()), outer - 1e-3);
      for (auto p : pts) {
        EXPECT_GE(p.first, 0.0);
        EXPECT_LE(p.first, opts.canvas);
        EXPECT_GE(p.second, 0.0);
        EXPECT_LE(p.second, opts.canvas);
      }
    }
  }
}

TEST(RenderArrangement, VertexMarkers) {
  RenderOptions opts;
  opts.show_vertices = true;
  const auto svg = render_arrangement(family_wedge(1), opts);
  EXPECT_TRUE(oracle::well_formed_xml(svg));
  EXPECT_GT(count(svg, "<circle "), 1u);
}

TEST(Render, ByteDeterministic) {
  for (int j : {1, 2}) {
    EXPECT_EQ(render_wedge(family_wedge(j)), render_wedge(family_wedge(j)));
    EXPECT_EQ(render_arrangement(family_wedge(j)), render_arrangement(family_wedge(j)));
  }
}

TEST(Render, ArrangementErrorsPropagate) {
  EXPECT_THROW(render_arrangement(WedgeSpec{3, {{"a", {{Side::Top, 1}}}}}), ExpansionError);
}

}  // namespace
}  // namespace dirac
