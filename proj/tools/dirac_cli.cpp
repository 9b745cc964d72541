// Command-line front end: generators, expansion, validation, statistics,
// audits and rendering over .acc / .wedge text.
//
// Exit codes: 0 success (all requested checks hold), 1 a check failed or the
// input is not a valid structure, 2 usage or input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dirac/dirac.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

constexpr const char* kBudgetEnv = "DIRAC_SUBSET_BUDGET";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string path;
  bool quiet = false;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool looks_like_wedge(const std::string& text) {
  for (const auto& line : dirac::text::tokenize(text)) return line.tokens.front() == "wedge";
  return false;
}

/// Reads an .acc structure, or a .wedge that is expanded on the fly.
dirac::IncidenceStructure load_structure(const std::string& path) {
  const auto text = read_input(path);
  if (looks_like_wedge(text)) return dirac::expand(dirac::parse_wedge(text)).structure;
  return dirac::parse_structure(text);
}

unsigned long long subset_budget() {
  const char* env = std::getenv(kBudgetEnv);
  if (!env || !*env) return dirac::kDefaultSubsetBudget;
  auto value = dirac::text::to_int(env);
  if (!value || *value < 1) throw UsageError(std::string(kBudgetEnv) + " must be a positive integer");
  return static_cast<unsigned long long>(*value);
}

std::string check_line(const std::string& name, bool holds, const std::string& margin) {
  return "CHECK " + name + " " + (holds ? "holds" : "fails") + " " + margin + "\n";
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

std::string describe_subset(const dirac::IncidenceStructure& s,
                            const std::vector<std::size_t>& subset) {
  std::string out;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ", ";
    out += "#" + std::to_string(subset[i]) + " {" + join(s.vertices()[subset[i]]) + "}";
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_stats(const std::string& in, const std::string& format, const Output& out) {
  const auto s = load_structure(in);
  auto report = dirac::validate(s);
  if (!report.valid()) {
    std::cerr << "invalid structure:\n";
    for (const auto& v : report.violations) std::cerr << "  " << dirac::describe(v) << "\n";
    return kCheckFailed;
  }
  const auto st = dirac::compute_stats(s);
  std::ostringstream os;
  if (format == "machine") {
    os << "n " << st.n << "\nalpha " << st.alpha << "\nvertices " << s.vertex_count()
       << "\nr " << st.r << "\n";
    for (const auto& [k, c] : st.tk) os << "tk " << k << " " << c << "\n";
    for (const auto& [d, c] : st.ld) os << "ld " << d << " " << c << "\n";
    os << "curve_degrees " << join(st.curve_degrees) << "\n";
    os << "vertex_degrees " << join(st.vertex_degrees) << "\n";
  } else {
    os << "n = " << st.n << "\nalpha = " << st.alpha << "\nvertices = " << s.vertex_count()
       << "\nr = " << st.r << "\n";
    for (const auto& [k, c] : st.tk) os << "t_" << k << " = " << c << "\n";
    for (const auto& [d, c] : st.ld) os << "l_" << d << " = " << c << "\n";
  }
  if (!out.quiet) out.write(os.str());
  return kOk;
}

int cmd_validate(const std::string& in, const Output& out) {
  const auto s = load_structure(in);
  const auto report = dirac::validate(s);
  std::ostringstream os;
  if (report.valid()) {
    os << "valid: alpha " << s.alpha() << ", " << s.n() << " curves, " << s.vertex_count()
       << " vertices\n";
  } else {
    os << "invalid: " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations) os << "  " << dirac::describe(v) << "\n";
  }
  if (!out.quiet) out.write(os.str());
  return report.valid() ? kOk : kCheckFailed;
}

int cmd_audit(const std::string& which, const std::string& in, const std::string& format,
              const std::string& gamma, int v, const std::string& fraction, const Output& out) {
  const auto s = load_structure(in);
  const bool machine = format == "machine";
  std::ostringstream os;
  bool all_hold = true;

  if (which == "thm3") {
    const auto st = dirac::compute_stats(s);
    const auto rep = dirac::audit_theorem3(st, s.alpha(), s.n());
    if (!machine) {
      os << "k t_k bound1 holds1 bound2 holds2\n";
      for (const auto& row : rep.rows) {
        if (row.tk == 0 && row.holds1 && row.holds2) continue;
        os << row.k << " " << row.tk << " " << row.bound1 << " " << (row.holds1 ? "yes" : "NO")
           << " " << (row.bound2_applicable ? row.bound2.str() : "-") << " "
           << (row.bound2_applicable ? (row.holds2 ? "yes" : "NO") : "-") << "\n";
      }
      os << "checked k = 2.." << rep.n << "; second bound from k = " << rep.part2_threshold
         << "\n";
    }
    os << check_line("thm3.part1", rep.part1_holds,
                     rep.part1_margin ? rep.part1_margin->str() : "0/1");
    os << check_line("thm3.part2", rep.part2_holds,
                     rep.part2_margin ? rep.part2_margin->str() : "0/1");
    all_hold = rep.part1_holds && rep.part2_holds;
  } else if (which == "dirac") {
    const auto rep = dirac::audit_dirac(s, subset_budget());
    if (!machine) {
      os << "g = " << rep.g << "\nh = " << rep.h << "\nwitness = "
         << describe_subset(s, rep.witness_subset) << "\n";
    }
    if (!rep.hypothesis_holds) {
      os << "NOTE dirac hypothesis_violated: " << rep.alpha << " vertex subset meets all "
         << rep.n << " curves\n";
    } else {
      os << check_line("dirac.g_ge_h", rep.g_ge_h, std::to_string(rep.g - rep.h) + "/1");
      os << check_line("dirac.binom", rep.binom_ineq_holds, rep.binom_margin.str() + "/1");
      all_hold = rep.g_ge_h && rep.binom_ineq_holds;
    }
  } else if (which == "pairs") {
    const auto st = dirac::compute_stats(s);
    const auto rep = dirac::audit_pair_identity(st, s.n());
    os << check_line("pairs", rep.holds,
                     std::to_string(rep.sum) + "/" + std::to_string(rep.expected));
    all_hold = rep.holds;
  } else if (which == "dyadic") {
    const auto st = dirac::compute_stats(s);
    dirac::DyadicProfileParams params;
    try {
      params.gamma = dirac::Rational::parse(gamma);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --gamma: ") + e.what());
    }
    if (params.gamma < dirac::Rational(0) || params.gamma >= dirac::Rational(1))
      throw UsageError("--gamma must lie in [0, 1)");
    if (v < 0) throw UsageError("--v must be non-negative");
    params.v = v;
    const auto prof = dirac::dyadic_profile(st, params);
    const auto expected = dirac::choose(s.n(), 2);
    if (machine) {
      os << "WINDOW " << prof.lower << " " << prof.upper << " " << prof.below << " "
         << prof.middle << " " << prof.above << "\n";
    } else {
      os << "n^gamma = " << prof.n_gamma << "\nwindow = [" << prof.lower << ", " << prof.upper
         << "]" << (prof.empty_window ? " (empty)" : "") << "\nbelow = " << prof.below
         << "\nmiddle = " << prof.middle << "\nabove = " << prof.above << "\n";
    }
    all_hold = prof.total() == expected;
    os << check_line("dyadic.total", all_hold,
                     std::to_string(prof.total()) + "/" + std::to_string(expected));
  } else if (which == "dichotomy") {
    dirac::Rational frac;
    try {
      frac = dirac::Rational::parse(fraction);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --fraction: ") + e.what());
    }
    if (frac <= dirac::Rational(0) || frac > dirac::Rational(1))
      throw UsageError("--fraction must lie in (0, 1]");
    const auto rep = dirac::dichotomy_report(s, frac, subset_budget());
    os << "BRANCH " << dirac::branch_name(rep.branch) << "\n";
    os << "COVERAGE " << rep.coverage << " " << (rep.large_coverage ? "large" : "small") << " "
       << describe_subset(s, rep.coverage_witness) << "\n";
    os << "VERTICES " << rep.vertex_count << " " << rep.vertices_per_curve << "\n";
  }

  if (!out.quiet) out.write(os.str());
  return all_hold ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudoline arrangement and incidence workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  app.add_option("--out", out.path, "Write output to this path instead of stdout");
  app.add_flag("--quiet", out.quiet, "Suppress report text; rely on the exit code");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a wedge or a structure");
  gen->require_subcommand(1);
  gen->fallthrough();
  int family_j = 1;
  auto* gen_family = gen->add_subcommand("family", "Wedge of the j-th family member (.wedge)");
  gen_family->add_option("--j", family_j, "Family index j >= 1")->required();
  int fixture_n = 3;
  auto* gen_pencil = gen->add_subcommand("pencil", "All curves through one point (.acc)");
  gen_pencil->add_option("--n", fixture_n)->required();
  auto* gen_near = gen->add_subcommand("near-pencil", "Pencil of n-1 curves plus a transversal");
  gen_near->add_option("--n", fixture_n)->required();
  auto* gen_simple = gen->add_subcommand("simple", "Every pair meets at its own double point");
  gen_simple->add_option("--n", fixture_n)->required();
  int plane_p = 2;
  std::optional<int> plane_n;
  std::uint64_t plane_seed = 0;
  bool plane_all = false;
  auto* gen_pg2 = gen->add_subcommand("pg2", "Lines of the projective plane over Z/p (.acc)");
  gen_pg2->add_option("--p", plane_p, "Prime field size")->required();
  auto* opt_n = gen_pg2->add_option("--n", plane_n, "Number of sampled lines");
  gen_pg2->add_option("--seed", plane_seed, "Sampling seed")->needs(opt_n);
  gen_pg2->add_flag("--all", plane_all, "Use every line")->excludes(opt_n);
  for (auto* sub : gen->get_subcommands({})) sub->fallthrough();

  // expand / validate / stats
  std::string input = "-";
  auto* expand_cmd = app.add_subcommand("expand", "Expand a .wedge into an .acc structure");
  expand_cmd->add_option("input", input, "Input path or - for stdin");
  bool expand_labels = false;
  expand_cmd->add_flag("--labels", expand_labels, "Add provenance comments");
  auto* validate_cmd = app.add_subcommand("validate", "Check the incidence axioms");
  validate_cmd->add_option("input", input, "Input path or - for stdin");
  std::string format = "text";
  auto* stats_cmd = app.add_subcommand("stats", "t_k, r and l_d statistics");
  stats_cmd->add_option("input", input, "Input path or - for stdin");
  stats_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));
  for (auto* sub : {expand_cmd, validate_cmd, stats_cmd}) sub->fallthrough();

  // audit
  auto* audit = app.add_subcommand("audit", "Exact inequality audits");
  audit->require_subcommand(1);
  audit->fallthrough();
  audit->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));
  std::string gamma = "0";
  int dyadic_v = 0;
  std::string fraction = "1/4";
  for (const char* name : {"thm3", "dirac", "pairs", "dyadic", "dichotomy"}) {
    auto* sub = audit->add_subcommand(name);
    sub->add_option("input", input, "Input path or - for stdin");
    sub->fallthrough();
    if (std::string(name) == "dyadic") {
      sub->add_option("--gamma", gamma, "Exponent A/B in [0,1)")->required();
      sub->add_option("--v", dyadic_v, "Dyadic shift v >= 0")->required();
    } else if (std::string(name) == "dichotomy") {
      sub->add_option("--fraction", fraction, "Coverage fraction A/B in (0,1]");
    }
  }

  // render
  auto* render = app.add_subcommand("render", "SVG drawings of a wedge");
  render->require_subcommand(1);
  render->fallthrough();
  dirac::RenderOptions ropts;
  std::string ratio = "4/5";
  render->add_option("--canvas", ropts.canvas, "Canvas size");
  render->add_option("--ratio", ratio, "Radius ratio between consecutive ranks");
  render->add_flag("--labels", ropts.show_labels, "Label bounce points");
  render->add_flag("--vertices", ropts.show_vertices, "Mark vertices");
  auto* render_wedge = render->add_subcommand("wedge");
  auto* render_arr = render->add_subcommand("arrangement");
  for (auto* sub : {render_wedge, render_arr}) {
    sub->add_option("input", input, "Input .wedge path or - for stdin");
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_family->parsed()) {
        out.write(dirac::serialize_wedge(dirac::family_wedge(family_j)));
      } else if (gen_pencil->parsed()) {
        out.write(dirac::serialize_structure(dirac::gen_pencil(fixture_n)));
      } else if (gen_near->parsed()) {
        out.write(dirac::serialize_structure(dirac::gen_near_pencil(fixture_n)));
      } else if (gen_simple->parsed()) {
        out.write(dirac::serialize_structure(dirac::gen_simple_cyclic(fixture_n)));
      } else if (gen_pg2->parsed()) {
        const auto plane = dirac::pg2(plane_p);
        std::vector<int> ids;
        if (plane_n && !plane_all) {
          ids = dirac::sample_lines(plane, *plane_n, plane_seed);
        } else {
          ids.resize(plane.size());
          for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
        }
        out.write(dirac::serialize_structure(dirac::structure_from_lines(plane, ids)));
      }
      return kOk;
    }
    if (expand_cmd->parsed()) {
      const auto arr = dirac::expand(dirac::parse_wedge(read_input(input)));
      std::string text;
      if (expand_labels) {
        for (std::size_t c = 0; c < arr.line_labels.size(); ++c) {
          text += "# curve " + std::to_string(c) + " ";
          std::visit(
              [&text](const auto& l) {
                using T = std::decay_t<decltype(l)>;
                if constexpr (std::is_same_v<T, dirac::label::Mirror>)
                  text += "mirror " + std::to_string(l.index);
                else if constexpr (std::is_same_v<T, dirac::label::BeamCopy>)
                  text += "beam " + l.beam + " copy " + std::to_string(l.copy);
                else
                  text += "infinity";
              },
              arr.line_labels[c]);
          text += "\n";
        }
      }
      out.write(text + dirac::serialize_structure(arr.structure));
      return kOk;
    }
    if (validate_cmd->parsed()) return cmd_validate(input, out);
    if (stats_cmd->parsed()) return cmd_stats(input, format, out);
    if (audit->parsed()) {
      for (auto* sub : audit->get_subcommands({}))
        if (sub->parsed())
          return cmd_audit(sub->get_name(), input, format, gamma, dyadic_v, fraction, out);
    }
    if (render->parsed()) {
      try {
        ropts.ratio = dirac::Rational::parse(ratio);
      } catch (const std::exception& e) {
        throw UsageError(std::string("bad --ratio: ") + e.what());
      }
      const auto w = dirac::parse_wedge(read_input(input));
      out.write(render_wedge->parsed() ? dirac::render_wedge(w, ropts)
                                       : dirac::render_arrangement(w, ropts));
      return kOk;
    }
  } catch (const dirac::ExpansionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == dirac::ExpansionError::Kind::InvalidWedge ? kUsage : kCheckFailed;
  } catch (const dirac::InvalidStructure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
