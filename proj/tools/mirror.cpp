// mirror: command-line front end for the mirror family library.
//
//   mirror graph    --n N --parabolic LIST [--format json|dot]
//   mirror solve    --n N --parabolic LIST --q LIST [--tol T] [--max-iter M]
//   mirror verify   --n N --parabolic LIST [--q LIST | --samples K --seed S] [--scalar float|complex]
//   mirror spectrum --n N --parabolic LIST --q LIST [--starts K] [--seed S]
//   mirror cells    --n N [--format csv|json]
//   mirror repro    gr24
//
// Reports go to stdout as JSON (cells default to CSV), diagnostics to stderr.
// Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 no convergence.
// MIRROR_TOL replaces the default tolerance when --tol is absent.

#include "mirror/mirror.hpp"

#include "gr24_fixture.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mirror;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNoConvergence = 3;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 0;
  std::string parabolic;
  std::string q;
  std::optional<double> tol;
  int max_iter = 200;
  int starts = 200;
  std::uint64_t seed = 7;
  int samples = 5;
  std::string format;
  std::string scalar = "float";
  std::string fixture;
};

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      T value;
      if constexpr (std::is_same_v<T, int>) {
        value = std::stoi(item, &used);
      } else {
        value = std::stod(item, &used);
      }
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::logic_error&) {
      throw InvalidInput(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

/// --tol, then MIRROR_TOL, then the command default.
double resolve_tol(const RunConfig& cfg, double fallback) {
  if (cfg.tol) {
    if (!(*cfg.tol > 0.0)) throw InvalidInput("--tol must be positive");
    return *cfg.tol;
  }
  if (const char* env = std::getenv("MIRROR_TOL")) {
    try {
      std::size_t used = 0;
      double v = std::stod(env, &used);
      if (used == std::string(env).size() && v > 0.0) return v;
    } catch (const std::logic_error&) {
    }
    throw InvalidInput(std::string("MIRROR_TOL is not a positive number: '") + env + "'");
  }
  return fallback;
}

ParabolicSpec make_spec(const RunConfig& cfg) {
  try {
    return ParabolicSpec(cfg.n, parse_list<int>(cfg.parabolic, "--parabolic"));
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

std::vector<double> make_qtilde(const RunConfig& cfg, const ParabolicSpec& s, bool allow_zero) {
  auto q = parse_list<double>(cfg.q, "--q");
  if (static_cast<int>(q.size()) != s.k())
    throw InvalidInput("--q needs " + std::to_string(s.k()) + " values for " + s.label());
  for (double x : q) {
    if (!std::isfinite(x) || x < 0.0 || (!allow_zero && x == 0.0))
      throw InvalidInput(allow_zero ? "--q values must be nonnegative" : "--q values must be positive");
  }
  return q;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_graph(const RunConfig& cfg) {
  MirrorGraph g(make_spec(cfg));
  std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "dot") {
    std::cout << graph_to_dot(g);
  } else if (format == "json") {
    print(graph_to_json(g));
  } else {
    throw InvalidInput("graph: --format must be json or dot");
  }
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg) {
  auto spec = make_spec(cfg);
  MirrorGraph g(spec);
  auto q = make_qtilde(cfg, spec, true);
  SolverConfig sc;
  sc.tol = resolve_tol(cfg, sc.tol);
  sc.max_iter = cfg.max_iter;
  SolveReport rep = solve_fiber(g, q, sc);
  print(solve_report_to_json(g, rep));
  if (!rep.converged) {
    std::cerr << "solve: no convergence after " << rep.iterations << " iterations\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}

template <Scalar S>
Json verify_point(const MirrorGraph& g, const ArrowAssignment<S>& rho, double tol, bool& passed) {
  PetersonReport rep = verify_peterson_identities(g, rho, tol);
  double qdev = quantum_relation_deviation(g, rho);
  rep.checks.push_back({"quantum_relations", qdev, qdev <= tol});
  passed = passed && rep.passed();
  return Json{{"rho", assignment_to_json(g, rho)}, {"report", peterson_report_to_json(rep)}};
}

int cmd_verify(const RunConfig& cfg) {
  auto spec = make_spec(cfg);
  if (spec.k() == 0) throw InvalidInput("verify: I^P must be nonempty");
  MirrorGraph g(spec);
  double tol = resolve_tol(cfg, 1e-9);
  if (cfg.scalar != "float" && cfg.scalar != "complex") throw InvalidInput("verify: --scalar must be float or complex");
  if (cfg.scalar == "complex" && spec.n() > kMaxEnumerationRank)
    throw InvalidInput("verify: complex mode needs n <= " + std::to_string(kMaxEnumerationRank));

  std::vector<std::vector<double>> fibers;
  if (!cfg.q.empty()) {
    fibers.push_back(make_qtilde(cfg, spec, false));
  } else {
    if (cfg.samples < 1) throw InvalidInput("verify: --samples must be at least 1");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unif(0.05, 10.0);
    for (int i = 0; i < cfg.samples; ++i) {
      std::vector<double> q;
      for (int j = 0; j < spec.k(); ++j) q.push_back(unif(rng));
      fibers.push_back(q);
    }
  }

  bool passed = true;
  bool converged = true;
  Json points = Json::array();
  for (const auto& q : fibers) {
    Json entry{{"qtilde", q}};
    if (cfg.scalar == "complex") {
      EnumerationConfig ec;
      ec.starts = cfg.starts;
      ec.seed = cfg.seed;
      std::vector<Complex> qc(q.begin(), q.end());
      Json roots = Json::array();
      for (const auto& rho : enumerate_complex_critical(g, qc, ec)) roots.push_back(verify_point(g, rho, tol, passed));
      entry["roots"] = roots;
    } else {
      SolverConfig sc;
      sc.max_iter = cfg.max_iter;
      SolveReport rep = solve_positive_fiber(g, q, sc);
      entry["converged"] = rep.converged;
      converged = converged && rep.converged;
      if (rep.converged) entry.update(verify_point(g, rep.rho, tol, passed));
    }
    points.push_back(entry);
  }
  print(Json{{"spec", spec_to_json(spec)},
             {"scalar", cfg.scalar},
             {"tolerance", tol},
             {"points", points},
             {"passed", passed && converged}});
  if (!converged) return kExitNoConvergence;
  return passed ? kExitOk : kExitFailed;
}

int cmd_spectrum(const RunConfig& cfg) {
  auto spec = make_spec(cfg);
  if (spec.n() > kMaxEnumerationRank)
    throw InvalidInput("spectrum: limited to n <= " + std::to_string(kMaxEnumerationRank));
  MirrorGraph g(spec);
  auto q = make_qtilde(cfg, spec, false);
  if (cfg.starts < 1) throw InvalidInput("spectrum: --starts must be at least 1");
  EnumerationConfig ec;
  ec.starts = cfg.starts;
  ec.seed = cfg.seed;
  ec.tol = resolve_tol(cfg, ec.tol);
  std::vector<Complex> qc(q.begin(), q.end());
  auto roots = enumerate_complex_critical(g, qc, ec);
  Json list = Json::array();
  for (const auto& rho : roots) {
    double res = 0.0;
    for (const auto& r : critical_residual(g, rho)) res = std::max(res, std::abs(r));
    list.push_back({{"rho", assignment_to_json(g, rho)}, {"residual", res}});
  }
  print(Json{{"spec", spec_to_json(spec)},
             {"qtilde", q},
             {"starts", cfg.starts},
             {"seed", cfg.seed},
             {"count", roots.size()},
             {"roots", list}});
  return kExitOk;
}

int cmd_cells(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxCellRank) throw InvalidInput("cells: --n must lie in 1..12");
  auto cells = enumerate_cells(cfg.n);
  std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format == "csv") {
    std::cout << cells_to_csv(cells);
  } else if (format == "json") {
    print(Json{{"n", cfg.n}, {"counts", cube_face_counts(cfg.n)}, {"cells", cells_to_json(cells)}});
  } else {
    throw InvalidInput("cells: --format must be csv or json");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// repro

ArrowAssignment<Complex> fixture_assignment(const MirrorGraph& g, const Json& values) {
  auto rho = constant_assignment(g, Complex(0.0));
  for (const auto& [name, text] : values.items()) {
    auto a = g.arrow_index(name);
    if (!a) throw std::runtime_error("fixture names unknown arrow " + name);
    rho[*a] = parse_fixture_value<Complex>(text.get<std::string>());
  }
  return rho;
}

template <class T>
Matrix<T> fixture_matrix(const Json& rows) {
  Matrix<T> m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_fixture_value<T>(rows[i][j].get<std::string>());
  return m;
}

double assignment_distance(const ArrowAssignment<Complex>& a, const ArrowAssignment<Complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

int cmd_repro(const RunConfig& cfg) {
  if (cfg.fixture != "gr24") throw InvalidInput("repro: unknown fixture '" + cfg.fixture + "' (available: gr24)");
  const Json fx = Json::parse(fixtures::kGr24);
  const double tol = resolve_tol(cfg, 1e-9);
  const double inf = std::numeric_limits<double>::infinity();
  ParabolicSpec spec(fx["n"].get<int>(), fx["parabolic"].get<std::vector<int>>());
  MirrorGraph g(spec);
  Json checks = Json::array();
  bool passed = true;
  auto add = [&](const std::string& name, double dev, Json detail = Json::object()) {
    bool ok = dev <= tol;
    passed = passed && ok;
    Json c = check_to_json({name, dev, ok});
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(c);
  };
  auto as_complex = [](const ArrowAssignment<double>& rho) {
    return rho.template map<Complex>([](double x) { return Complex(x); });
  };

  // Graph shape.
  {
    const Json& want = fx["graph"];
    std::vector<std::string> names;
    for (const Arrow& a : g.arrows()) names.push_back(a.name());
    bool same = g.num_bullets() == want["bullets"].get<std::size_t>() &&
                g.spec().k() + 1 == want["stars"].get<int>() &&
                g.squares().size() == want["boxes"].get<std::size_t>() &&
                names == want["arrows"].get<std::vector<std::string>>();
    add("graph", same ? 0.0 : inf, {{"bullets", g.num_bullets()}, {"arrows", names}});
  }

  // Real solutions at Q~ = 4 and Q~ = 1.
  for (const char* key : {"base_solution", "positive_point"}) {
    const Json& want = fx[key];
    double q = parse_fixture_value<double>(want["qtilde"].get<std::string>());
    SolveReport rep = solve_positive_fiber(g, {q});
    double dev = rep.converged ? assignment_distance(as_complex(rep.rho), fixture_assignment(g, want["rho"])) : inf;
    add(key, dev, {{"rho", assignment_to_json(g, rep.rho)}});
    if (std::string(key) == "positive_point" && rep.converged) {
      auto report = verify_peterson_identities(g, rep.rho, tol);
      double worst = 0.0;
      for (const auto& c : report.checks) worst = std::max(worst, c.deviation);
      add("positive_point_identities", worst);
    }
  }

  // Complex critical points at Q~ = 1, matched up to order.
  {
    const Json& want = fx["complex_roots"];
    double q = parse_fixture_value<double>(want["qtilde"].get<std::string>());
    auto found = enumerate_complex_critical(g, {Complex(q)});
    double dev = found.size() == want["roots"].size() ? 0.0 : inf;
    for (const auto& r : want["roots"]) {
      auto target = fixture_assignment(g, r);
      double best = inf;
      for (const auto& f : found) best = std::min(best, assignment_distance(f, target));
      dev = std::max(dev, best);
    }
    add("complex_roots", dev, {{"count", found.size()}});
  }

  // Peterson points outside the open stratum: exact check and rejection.
  {
    int idx = 0;
    for (const auto& pt : fx["missing_points"]) {
      auto flag = fixture_matrix<GaussianRational>(pt["u"]) *
                  word_matrix<GaussianRational>(spec.n(), pt["word"].get<WeylWord>());
      bool exact = true;
      for (const auto& r : peterson_residual(flag)) exact = exact && r == GaussianRational(0);
      bool rejected = false;
      try {
        deodhar_factorize(flag, positive_pattern(spec));
      } catch (const NotInStratum&) {
        rejected = true;
      }
      std::string name = "missing_point_" + std::to_string(++idx);
      add(name + "_peterson_exact", exact ? 0.0 : inf);
      add(name + "_not_in_stratum", rejected ? 0.0 : inf);
    }
  }

  // The s-family of Peterson points and its preimages under phi.
  for (const auto& member : fx["s_family"]) {
    std::string s = member["s"].get<std::string>();
    Complex q = parse_fixture_value<Complex>(member["q"].get<std::string>());
    auto flag = fixture_matrix<Complex>(member["u"]) * word_matrix<Complex>(spec.n(), member["word"].get<WeylWord>());
    auto rho = fixture_assignment(g, member["rho"]);
    double res = 0.0;
    for (const auto& r : critical_residual(g, rho)) res = std::max(res, std::abs(r));
    add("s_family[" + s + "]_critical", res);
    add("s_family[" + s + "]_peterson", max_magnitude(peterson_residual(flag)));
    add("s_family[" + s + "]_phi", max_abs_difference(phi_matrix(g, rho), flag));
    double bdev = inf;
    try {
      bdev = assignment_distance(beta(g, flag, std::vector<Complex>{q}), rho);
    } catch (const std::domain_error&) {
    }
    add("s_family[" + s + "]_beta", bdev);
  }

  print(Json{{"fixture", cfg.fixture}, {"tolerance", tol}, {"checks", checks}, {"passed", passed}});
  return passed ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirror family of SL(n+1)/P: graphs, critical points, Peterson map"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto spec_opts = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank n of SL(n+1)")->required();
    sub->add_option("--parabolic", cfg.parabolic, "I^P as a comma list, e.g. 2,5,6");
  };
  auto tol_opt = [&](CLI::App* sub, const char* help) {
    sub->add_option_function<double>("--tol", [&](double v) { cfg.tol = v; }, help);
  };

  auto* graph = app.add_subcommand("graph", "export the mirror graph");
  spec_opts(graph);
  graph->add_option("--format", cfg.format, "json (default) or dot");

  auto* solve = app.add_subcommand("solve", "positive critical point on a fiber (zeros select a boundary stratum)");
  spec_opts(solve);
  solve->add_option("--q", cfg.q, "Q~ values, one per n_j")->required();
  tol_opt(solve, "gradient tolerance (default 1e-12)");
  solve->add_option("--max-iter", cfg.max_iter, "Newton iteration cap");

  auto* verify = app.add_subcommand("verify", "check the Peterson-side identities at critical points");
  spec_opts(verify);
  verify->add_option("--q", cfg.q, "a single fiber; otherwise random fibers");
  verify->add_option("--samples", cfg.samples, "random fibers with Q~ in (0.05, 10)");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--starts", cfg.starts, "starts per fiber in complex mode");
  verify->add_option("--scalar", cfg.scalar, "float (positive point) or complex (all roots, n <= 3)");
  verify->add_option("--max-iter", cfg.max_iter, "Newton iteration cap");
  tol_opt(verify, "check tolerance (default 1e-9)");

  auto* spectrum = app.add_subcommand("spectrum", "complex critical points by multi-start Newton");
  spec_opts(spectrum);
  spectrum->add_option("--q", cfg.q, "nonzero Q~ values")->required();
  spectrum->add_option("--starts", cfg.starts, "number of random starts");
  spectrum->add_option("--seed", cfg.seed, "random seed");
  tol_opt(spectrum, "root residual tolerance (default 1e-10)");

  auto* cells = app.add_subcommand("cells", "cells of the totally nonnegative Peterson variety");
  cells->add_option("--n", cfg.n, "rank n")->required();
  cells->add_option("--format", cfg.format, "csv (default) or json");

  auto* repro = app.add_subcommand("repro", "compare against a stored worked example");
  repro->add_option("fixture", cfg.fixture, "fixture name (gr24)")->required();
  tol_opt(repro, "comparison tolerance (default 1e-9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*graph) return cmd_graph(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*spectrum) return cmd_spectrum(cfg);
    if (*cells) return cmd_cells(cfg);
    if (*repro) return cmd_repro(cfg);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitInvalid;
}
