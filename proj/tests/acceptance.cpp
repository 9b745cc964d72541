// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dirac/dirac.hpp"
#include "oracles.hpp"

using namespace dirac;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
    ++checks_;
  }
  Outcome finish(const std::string& summary) const {
    Outcome out{failed_ == 0, summary};
    std::ostringstream os;
    os << summary << " [" << checks_ - failed_ << "/" << checks_ << " checks]";
    for (const auto& f : failures_) os << "; " << f;
    out.detail = os.str();
    return out;
  }

 private:
  std::vector<std::string> failures_;
  long checks_ = 0;
  long failed_ = 0;
};

std::size_t apex_degree(const ExpandedArrangement& a) {
  for (std::size_t i = 0; i < a.vertex_labels.size(); ++i)
    if (std::holds_alternative<label::Apex>(a.vertex_labels[i]))
      return a.structure.vertices()[i].size();
  return 0;
}

std::vector<int> all_ids(const ProjectivePlane& plane) {
  std::vector<int> ids(plane.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

struct Named {
  std::string name;
  IncidenceStructure s;
};

std::vector<Named> audit_corpus() {
  std::vector<Named> out;
  for (int j = 1; j <= 12; ++j)
    out.push_back({"family j=" + std::to_string(j), expand(family_wedge(j)).structure});
  for (int n = 3; n <= 200; ++n) {
    out.push_back({"pencil " + std::to_string(n), gen_pencil(n)});
    out.push_back({"near-pencil " + std::to_string(n), gen_near_pencil(n)});
    out.push_back({"simple " + std::to_string(n), gen_simple_cyclic(n)});
  }
  for (int p : {5, 7, 11, 13}) {
    const auto plane = pg2(p);
    const auto lines = static_cast<int>(plane.size());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const int n = 2 + static_cast<int>(seed * 37 % static_cast<std::uint64_t>(lines - 1));
      out.push_back({"PG(2," + std::to_string(p) + ") seed " + std::to_string(seed),
                     structure_from_lines(plane, sample_lines(plane, n, seed))});
    }
  }
  return out;
}

Outcome criterion1() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  for (int j = 1; j <= 12; ++j) {
    const auto a = expand(family_wedge(j));
    const auto st = compute_stats(a.structure);
    const int n = a.structure.n();
    const auto tag = "j=" + std::to_string(j);
    c.require(validate(a.structure).valid(), tag + " validates");
    c.require(n == 18 * j + 7, tag + " n=" + std::to_string(n));
    c.require(st.r == 8 * j + 2, tag + " r=" + std::to_string(st.r));
    c.require(9 * st.r == 4 * n - 10, tag + " r=(4n-10)/9");
    c.require(3 * static_cast<int>(apex_degree(a)) == n - 1, tag + " apex=(n-1)/3");
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(secs < 10.0, "runtime " + std::to_string(secs) + "s");
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "family j=1..12: n=18j+7, r=8j+2, apex=(n-1)/3 in " << secs << "s";
  return c.finish(os.str());
}

Outcome criterion2() {
  Criterion c;
  const auto a = expand(family_wedge(1));
  const auto st = compute_stats(a.structure);
  c.require(a.structure.n() == 25, "n=" + std::to_string(a.structure.n()));
  c.require(st.r == 10, "r=" + std::to_string(st.r));
  return c.finish("base case: 25 curves, max curve degree 10");
}

Outcome criterion3(const std::vector<Named>& corpus) {
  Criterion c;
  for (const auto& [name, s] : corpus) {
    const auto rep = audit_theorem3(compute_stats(s), s.alpha(), s.n());
    c.require(rep.part1_holds, name + " part 1");
    c.require(rep.part2_holds, name + " part 2");
  }
  return c.finish("t_k bounds on " + std::to_string(corpus.size()) + " structures");
}

Outcome criterion4(const std::vector<Named>& corpus) {
  Criterion c;
  int hypothesis = 0, pencils = 0;
  for (const auto& [name, s] : corpus) {
    const auto rep = audit_dirac(s);
    if (name.rfind("pencil ", 0) == 0) {
      ++pencils;
      c.require(!rep.hypothesis_holds, name + " hypothesis_violated");
    }
    if (!rep.hypothesis_holds) continue;
    ++hypothesis;
    c.require(rep.g_ge_h, name + " g>=h");
    c.require(rep.binom_ineq_holds, name + " C(g,a)h>=n-1");
  }
  return c.finish(std::to_string(hypothesis) + " structures satisfy the hypothesis, " +
                  std::to_string(pencils) + " pencils flagged");
}

Outcome criterion5() {
  Criterion c;
  long cases = 0;
  auto check = [&](const IncidenceStructure& s, const std::string& name) {
    ++cases;
    const auto rep = audit_pair_identity(compute_stats(s), s.n());
    c.require(rep.holds && rep.sum == choose(s.n(), 2), name);
  };
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i)
    check(oracle::random_linear_space(std::uniform_int_distribution<int>(3, 40)(rng), rng),
          "linear space " + std::to_string(i));
  for (int p : {2, 3, 5, 7, 11}) {
    const auto plane = pg2(p);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const int n = 2 + static_cast<int>(rng() % (plane.size() - 1));
      check(structure_from_lines(plane, sample_lines(plane, n, seed ^ rng())), "plane sample");
    }
  }
  std::uniform_int_distribution<int> m_dist(2, 12), beams(0, 3), len(1, 6), rank(1, 6);
  int wedges = 0;
  while (wedges < 100) {
    WedgeSpec w{m_dist(rng), {}};
    const int nb = beams(rng);
    for (int b = 0; b < nb; ++b) {
      BeamSpec beam{"b" + std::to_string(b), {}};
      const int l = len(rng);
      for (int k = 0; k < l; ++k)
        beam.events.push_back({k % 2 == 0 ? Side::Top : Side::Bottom, rank(rng)});
      w.beams.push_back(beam);
    }
    try {
      check(expand(w).structure, "random wedge");
      ++wedges;
    } catch (const ExpansionError&) {
    }
  }
  for (int n = 3; n <= 40; ++n) {
    check(gen_pencil(n), "pencil");
    check(gen_near_pencil(n), "near-pencil");
    check(gen_simple_cyclic(n), "simple");
  }
  for (int j = 1; j <= 6; ++j) check(expand(family_wedge(j)).structure, "family");
  c.require(cases >= 500, "case count " + std::to_string(cases));
  return c.finish("sum of l_d = C(n,2) on " + std::to_string(cases) + " randomized cases");
}

Outcome criterion6() {
  Criterion c;
  for (int n = 3; n <= 60; ++n) {
    const auto simple = compute_stats(gen_simple_cyclic(n));
    c.require(simple.tk == std::map<int, std::int64_t>{{2, choose(n, 2)}},
              "simple " + std::to_string(n) + " t_2");
    c.require(simple.r == n - 1, "simple " + std::to_string(n) + " r");
    c.require(compute_stats(gen_near_pencil(n)).r == n - 1,
              "near-pencil " + std::to_string(n) + " r");
  }
  for (int p : {2, 3, 5, 7, 11}) {
    const auto plane = pg2(p);
    const auto st = compute_stats(structure_from_lines(plane, all_ids(plane)));
    const std::int64_t points = p * p + p + 1;
    c.require(st.tk == std::map<int, std::int64_t>{{p + 1, points}},
              "PG(2," + std::to_string(p) + ") t_{p+1}");
    c.require(st.r == p + 1, "PG(2," + std::to_string(p) + ") r");
  }
  return c.finish("simple, near-pencil and full-plane closed forms");
}

struct ClassMax {
  int mirror_even = 0, mirror_odd = 0, infinity = 0, red = 0, blue = 0, worst = 0;
};

ClassMax class_max(int j) {
  const auto a = expand(family_wedge(j));
  const auto st = compute_stats(a.structure);
  ClassMax out;
  for (std::size_t c = 0; c < a.line_labels.size(); ++c) {
    const int d = st.curve_degrees[c];
    int* slot = &out.infinity;
    if (const auto* m = std::get_if<label::Mirror>(&a.line_labels[c]))
      slot = m->index % 2 == 0 ? &out.mirror_even : &out.mirror_odd;
    else if (const auto* b = std::get_if<label::BeamCopy>(&a.line_labels[c]))
      slot = b->beam == "red" ? &out.red : &out.blue;
    *slot = std::max(*slot, d);
    out.worst = std::max(out.worst, d);
  }
  return out;
}

Outcome criterion7() {
  Criterion c;
  std::ostringstream deltas;
  ClassMax prev = class_max(1);
  for (int j = 2; j <= 8; ++j) {
    const auto cur = class_max(j);
    const auto tag = "j=" + std::to_string(j - 1) + "->" + std::to_string(j);
    const int de = cur.mirror_even - prev.mirror_even;
    const int dodd = cur.mirror_odd - prev.mirror_odd;
    c.require(cur.worst - prev.worst == 8, tag + " worst class +" +
                                               std::to_string(cur.worst - prev.worst));
    c.require(cur.red - prev.red == 8, tag + " red");
    c.require(cur.blue - prev.blue == 8, tag + " blue");
    c.require(std::max(de, dodd) == 8, tag + " one mirror class +8");
    deltas << " " << tag << ":mirrors+" << std::max(de, dodd) << "/+" << std::min(de, dodd)
           << ",inf+" << cur.infinity - prev.infinity;
    prev = cur;
  }
  return c.finish("per-class max-degree deltas, red/blue/worst +8;" + deltas.str());
}

std::string audit_text(const IncidenceStructure& s) {
  std::ostringstream os;
  const auto st = compute_stats(s);
  const auto t3 = audit_theorem3(st, s.alpha(), s.n());
  for (const auto& row : t3.rows)
    os << row.k << ' ' << row.tk << ' ' << row.bound1 << ' ' << row.holds1 << ' ' << row.holds2
       << '\n';
  const auto d = audit_dirac(s);
  os << d.g << ' ' << d.h << ' ' << d.binom_lhs << ' ' << d.witness_subset.size() << '\n';
  const auto dy = dyadic_profile(st, {Rational(1, 2), 1});
  os << dy.lower << ' ' << dy.upper << ' ' << dy.below << ' ' << dy.middle << ' ' << dy.above
     << '\n';
  const auto di = dichotomy_report(s, Rational(1, 4));
  os << branch_name(di.branch) << ' ' << di.coverage << '\n';
  return os.str();
}

Outcome criterion8() {
  Criterion c;
  auto twice = [&](const std::string& name, const std::function<std::string()>& f) {
    c.require(f() == f(), name);
  };
  for (int j = 1; j <= 3; ++j) {
    twice("family wedge", [j] { return serialize_wedge(family_wedge(j)); });
    twice("family expand", [j] { return serialize_structure(expand(family_wedge(j)).structure); });
    twice("family audits", [j] { return audit_text(expand(family_wedge(j)).structure); });
    twice("render wedge", [j] { return render_wedge(family_wedge(j)); });
    twice("render arrangement", [j] { return render_arrangement(family_wedge(j)); });
  }
  twice("fixtures", [] {
    return serialize_structure(gen_pencil(9)) + serialize_structure(gen_near_pencil(9)) +
           serialize_structure(gen_simple_cyclic(9));
  });
  twice("plane sample", [] {
    const auto plane = pg2(7);
    return serialize_structure(structure_from_lines(plane, sample_lines(plane, 12, 42)));
  });
  twice("fixture audits", [] { return audit_text(gen_near_pencil(12)); });

  std::vector<IncidenceStructure> canon{gen_pencil(5), gen_near_pencil(8), gen_simple_cyclic(7),
                                        expand(family_wedge(2)).structure};
  const auto plane = pg2(5);
  canon.push_back(structure_from_lines(plane, all_ids(plane)));
  for (const auto& s : canon) {
    const auto text = serialize_structure(s);
    c.require(serialize_structure(parse_structure(text)) == text, "acc round trip");
  }
  for (int j = 1; j <= 3; ++j) {
    const auto text = serialize_wedge(family_wedge(j));
    c.require(serialize_wedge(parse_wedge(text)) == text, "wedge round trip");
  }
  return c.finish("byte-identical reruns and canonical round trips");
}

Outcome criterion9() {
  Criterion c;
  for (int j : {1, 2}) {
    const auto svg = render_arrangement(family_wedge(j));
    std::size_t polylines = 0;
    for (auto pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1))
      ++polylines;
    const std::size_t expected = j == 1 ? 25 : 43;
    c.require(oracle::well_formed_xml(svg), "j=" + std::to_string(j) + " well-formed");
    c.require(polylines == expected,
              "j=" + std::to_string(j) + " polylines " + std::to_string(polylines));
  }
  return c.finish("arrangement SVGs for j=1,2: well-formed, 25 and 43 polylines");
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria;
  std::vector<Named> corpus;
  auto corpus_ref = [&]() -> const std::vector<Named>& {
    if (corpus.empty()) corpus = audit_corpus();
    return corpus;
  };
  criteria.push_back(criterion1);
  criteria.push_back(criterion2);
  criteria.push_back([&] { return criterion3(corpus_ref()); });
  criteria.push_back([&] { return criterion4(corpus_ref()); });
  criteria.push_back(criterion5);
  criteria.push_back(criterion6);
  criteria.push_back(criterion7);
  criteria.push_back(criterion8);
  criteria.push_back(criterion9);

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i]();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failed;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << out.detail
              << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
