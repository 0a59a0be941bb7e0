// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "mirror/mirror.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace mirror;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// SL2/B, SL3/B, Gr_2(C^4), SL4/B, F_{1,3}(C^4).
std::vector<ParabolicSpec> criterion_specs() {
  return {ParabolicSpec(1, {1}), ParabolicSpec(2, {1, 2}), ParabolicSpec(3, {2}), ParabolicSpec(3, {1, 2, 3}),
          ParabolicSpec(3, {1, 3})};
}

std::vector<ParabolicSpec> specs_up_to(int max_n) {
  std::vector<ParabolicSpec> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    for (const auto& ip : subsets_of(all))
      if (!ip.empty()) out.emplace_back(n, ip);
  }
  return out;
}

// Q~ uniform in the open box (0, 10)^k.
std::vector<double> random_qtilde(int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 10.0);
  std::vector<double> q;
  while (static_cast<int>(q.size()) < k) {
    double x = unif(rng);
    if (x > 0.0) q.push_back(x);
  }
  return q;
}

double max_diff(const ArrowAssignment<double>& a, const ArrowAssignment<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Column-subset sum for G^{(m,r)}_l: columns r_1 < ... < r_s <= r read from the
// right with m_s = m and m_{i-1} = m_i - deg c~_{m_i, r_i}, degrees adding to l.
SparsePoly g_brute_force(const MirrorGraph& g, int m, int r, int l) {
  if (l == 0) return SparsePoly(1);
  if (l < 0 || l > r || !is_bullet_position(g.spec(), m, r)) return SparsePoly();
  SparsePoly total;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    SparsePoly prod(1);
    int row = m;
    int degree = 0;
    for (int c = r; c >= 1; --c) {
      if (!(mask & (1u << (c - 1)))) continue;
      int p = ctilde_degree(g.spec(), row, c);
      prod *= ctilde(g, row, c);
      degree += p;
      row -= p;
    }
    if (degree == l) total += prod;
  }
  return total;
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  std::string cmd = std::string(MIRROR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// ---------------------------------------------------------------------------

Outcome gr24_positive_point() {
  auto t0 = std::chrono::steady_clock::now();
  CliRun r = run_cli("solve --n 3 --parabolic 2 --q 1");
  double elapsed = seconds_since(t0);
  if (r.code != 0) return {false, "solve exited with " + std::to_string(r.code)};
  auto j = Json::parse(r.out);
  const double h = 1.0 / std::sqrt(2.0);
  double dev = 0.0;
  for (const char* a : {"c(3,1)", "d(3,2)", "c(3,2)", "d(2,2)"}) dev = std::max(dev, std::abs(j["rho"][a].get<double>() - h));
  for (const char* a : {"c(2,1)", "d(3,3)"}) dev = std::max(dev, std::abs(j["rho"][a].get<double>() - 2 * h));
  return {dev <= 1e-9 && elapsed < 1.0, "max deviation " + fmt(dev) + ", " + fmt(elapsed) + " s"};
}

Outcome gr24_base_solution() {
  MirrorGraph g(ParabolicSpec(3, {2}));
  auto rep = solve_positive_fiber(g, {4.0});
  double dev = 0.0;
  for (const char* a : {"c(3,1)", "d(3,2)", "c(3,2)", "d(2,2)"}) dev = std::max(dev, std::abs(rep.rho.at(g, a) - 1.0));
  for (const char* a : {"c(2,1)", "d(3,3)"}) dev = std::max(dev, std::abs(rep.rho.at(g, a) - 2.0));

  // q~ as a path product, and after every arrow a -> lambda a.
  const Rational lambda(3, 2);
  SparsePoly path(1);
  for (std::size_t a : qtilde_path(g, 1)) path *= SparsePoly::variable(static_cast<int>(a));
  auto scale = [&](int id) { return SparsePoly(lambda) * SparsePoly::variable(id); };
  Rational l4 = lambda * lambda * lambda * lambda;
  bool exact = path.substitute(scale) == SparsePoly(l4) * path;
  SparsePoly kq = kappa_q(g, 1);
  exact = exact && kq.substitute(scale) == SparsePoly(l4) * kq;
  return {rep.converged && dev <= 1e-9 && exact,
          "max deviation " + fmt(dev) + ", scaling " + std::string(exact ? "exact" : "broken")};
}

Outcome complex_counts() {
  auto t0 = std::chrono::steady_clock::now();
  EnumerationConfig cfg;
  cfg.starts = 200;
  cfg.seed = 7;
  auto gr = enumerate_complex_critical(MirrorGraph(ParabolicSpec(3, {2})), {Complex(1.0)}, cfg);
  auto fl = enumerate_complex_critical(MirrorGraph(ParabolicSpec(2, {1, 2})), {Complex(1.0), Complex(2.0)}, cfg);
  double elapsed = seconds_since(t0);
  return {gr.size() == 4 && fl.size() == 6 && elapsed < 10.0,
          "Gr2(C4) " + std::to_string(gr.size()) + " roots, SL3/B " + std::to_string(fl.size()) + " roots, " +
              fmt(elapsed) + " s"};
}

Outcome missing_points() {
  ParabolicSpec s(3, {2});
  int exact = 0;
  int rejected = 0;
  for (int sign : {1, -1}) {
    auto u = Matrix<GaussianRational>::identity(4);
    u(0, 2) = GaussianRational(0, sign);
    u(1, 3) = GaussianRational(0, sign);
    auto flag = u * word_matrix<GaussianRational>(3, {1, 3});
    bool zero = true;
    for (const auto& r : peterson_residual(flag)) zero = zero && r == GaussianRational(0);
    exact += zero;
    try {
      deodhar_factorize(flag, positive_pattern(s));
    } catch (const NotInStratum&) {
      ++rejected;
    }
  }
  return {exact == 2 && rejected == 2,
          std::to_string(exact) + "/2 exact on Y, " + std::to_string(rejected) + "/2 NotInStratum"};
}

struct SampledPoint {
  std::size_t spec;
  SolveReport rep;
};

// 20 random fibers per criterion spec, shared by criteria 5 and 6.
const std::vector<SampledPoint>& sampled_points() {
  static const std::vector<SampledPoint> points = [] {
    std::vector<SampledPoint> out;
    std::mt19937_64 rng(2024);
    auto specs = criterion_specs();
    for (std::size_t i = 0; i < specs.size(); ++i) {
      MirrorGraph g(specs[i]);
      for (int trial = 0; trial < 20; ++trial) out.push_back({i, solve_positive_fiber(g, random_qtilde(specs[i].k(), rng))});
    }
    return out;
  }();
  return points;
}

Outcome quantum_relations() {
  auto specs = criterion_specs();
  double dev = 0.0;
  bool converged = true;
  for (const auto& p : sampled_points()) {
    MirrorGraph g(specs[p.spec]);
    converged = converged && p.rep.converged;
    dev = std::max(dev, quantum_relation_deviation(g, p.rep.rho));
  }
  return {converged && dev <= 1e-8, "max deviation " + fmt(dev) + " over " + std::to_string(sampled_points().size()) + " points"};
}

Outcome peterson_identities() {
  auto specs = criterion_specs();
  double residual = 0.0;
  double identity = 0.0;
  double diagram = 0.0;
  for (const auto& p : sampled_points()) {
    MirrorGraph g(specs[p.spec]);
    auto rep = verify_peterson_identities(g, p.rep.rho, 1e-9);
    residual = std::max(residual, rep.check("peterson_residual").deviation);
    identity = std::max(identity, rep.check("matrix_identity").deviation);
    diagram = std::max(diagram, rep.check("diagram").deviation);
  }
  return {residual <= 1e-9 && identity <= 1e-9 && diagram <= 1e-9,
          "peterson " + fmt(residual) + ", identity " + fmt(identity) + ", q " + fmt(diagram)};
}

Outcome recursions() {
  int mismatches = 0;
  int compared = 0;
  for (const auto& s : specs_up_to(4)) {
    MirrorGraph g(s);
    GPolynomials G(g);
    for (std::size_t v : g.bullets()) {
      const Vertex& x = g.vertices()[v];
      for (int l = 0; l <= x.r; ++l) {
        ++compared;
        if (!(G(x.m, x.r, l) == g_brute_force(g, x.m, x.r, l))) ++mismatches;
      }
    }
  }
  double dev = 0.0;
  std::mt19937_64 rng(99);
  for (const auto& s : criterion_specs()) {
    MirrorGraph g(s);
    GPolynomials G(g);
    for (int trial = 0; trial < 5; ++trial) {
      auto rho = solve_positive_fiber(g, random_qtilde(s.k(), rng)).rho;
      for (std::size_t v : g.bullets()) {
        const Vertex& x = g.vertices()[v];
        for (int l = 0; l <= x.r; ++l) dev = std::max(dev, std::abs(G.second_recursion(x.m, x.r, l).evaluate(rho.values)));
      }
      for (int j = 1; j <= s.k(); ++j)
        for (int p = 1; p < s.block_length(j + 1); ++p)
          for (int l = 0; l <= s.nj(j); ++l)
            dev = std::max(dev, std::abs(G.evaluate(s.nj(j) + p, s.nj(j), l, rho) - G.evaluate(s.nj(j), s.nj(j), l, rho)));
    }
  }
  return {mismatches == 0 && dev <= 1e-9, std::to_string(compared - mismatches) + "/" + std::to_string(compared) +
                                              " column recursions exact, critical-point identities " + fmt(dev)};
}

Outcome convexity_uniqueness() {
  bool pd = true;
  for (const auto& p : sampled_points()) pd = pd && p.rep.hessian_always_pd;
  std::mt19937_64 rng(4242);
  std::normal_distribution<double> normal(0.0, 1.5);
  double spread = 0.0;
  int failed = 0;
  for (const auto& s : criterion_specs()) {
    MirrorGraph g(s);
    for (int fiber = 0; fiber < 10; ++fiber) {
      auto q = random_qtilde(s.k(), rng);
      auto ref = solve_positive_fiber(g, q);
      pd = pd && ref.hessian_always_pd;
      for (int start = 0; start < 100; ++start) {
        SolverConfig cfg;
        cfg.start.resize(g.num_bullets());
        for (auto& t : cfg.start) t = normal(rng);
        auto rep = solve_positive_fiber(g, q, cfg);
        if (!rep.converged) ++failed;
        pd = pd && rep.hessian_always_pd;
        spread = std::max(spread, max_diff(rep.rho, ref.rho));
      }
    }
  }
  return {pd && failed == 0 && spread <= 1e-8, std::string("Cholesky ") + (pd ? "always succeeded" : "failed") +
                                                    ", " + std::to_string(failed) + " unconverged, spread " + fmt(spread)};
}

Outcome classical_limit() {
  std::vector<Rational> x{1, 2, 3, 4};
  bool ok = true;
  Rational e2;
  for (const auto& s : {ParabolicSpec(3, {1, 2, 3}), ParabolicSpec(3, {2})}) {
    for (const auto& row : classical_limit_check(s, x)) {
      ok = ok && row.lhs == row.rhs;
      if (row.l == 2) e2 = row.lhs;
    }
  }
  return {ok && e2 == 35, "e_2 = " + rational_to_string(e2)};
}

Outcome positivity_and_cells() {
  std::mt19937_64 rng(7);
  double min_param = std::numeric_limits<double>::infinity();
  double min_u_minor = std::numeric_limits<double>::infinity();
  int misclassified = 0;
  for (const auto& s : criterion_specs()) {
    MirrorGraph g(s);
    bool borel = s.k() == s.n();
    for (int trial = 0; trial < 5; ++trial) {
      auto rho = solve_positive_fiber(g, random_qtilde(s.k(), rng)).rho;
      for (double t : deodhar_factorize(phi(g, rho), positive_pattern(s))) min_param = std::min(min_param, t);
      if (borel) min_u_minor = std::min(min_u_minor, min_minor(u_matrix(g, rho)));
    }
    for (const auto& ipp : subsets_of(s.ip())) {
      auto q = random_qtilde(s.k(), rng);
      for (int j = 1; j <= s.k(); ++j)
        if (std::binary_search(ipp.begin(), ipp.end(), s.nj(j))) q[static_cast<std::size_t>(j - 1)] = 0.0;
      if (classify_boundary(g, solve_fiber(g, q).rho) != ipp) ++misclassified;
    }
  }
  bool cells_ok = true;
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    cells_ok = cells_ok && enumerate_cells(n).size() == total;
    auto counts = cube_face_counts(n);
    std::uint64_t binom = 1;
    for (int m = 0; m <= n; ++m) {
      if (m > 0) binom = binom * static_cast<std::uint64_t>(n - m + 1) / static_cast<std::uint64_t>(m);
      cells_ok = cells_ok && counts[static_cast<std::size_t>(m)] == binom * (std::uint64_t{1} << (n - m));
    }
  }
  return {min_param > 0.0 && min_u_minor >= -1e-12 && misclassified == 0 && cells_ok,
          "min Deodhar parameter " + fmt(min_param) + ", min minor of u " + fmt(min_u_minor) + ", " +
              std::to_string(misclassified) + " misclassified strata, cell counts " + (cells_ok ? "match" : "differ")};
}

Outcome roundtrips() {
  std::mt19937_64 rng(11);
  double dev = 0.0;
  for (const auto& s : criterion_specs()) {
    MirrorGraph g(s);
    for (int trial = 0; trial < 50; ++trial) {
      auto rho = solve_positive_fiber(g, random_qtilde(s.k(), rng)).rho;
      dev = std::max(dev, max_diff(beta(g, phi(g, rho), qtilde_values(g, rho)), rho));
    }
  }
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  auto nonzero = [&] {
    int a = 0;
    while (a == 0) a = num(rng);
    return Rational(a, den(rng));
  };
  int exact = 0;
  int total = 0;
  for (const auto& s : criterion_specs()) {
    MirrorGraph g(s);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> q;
      std::vector<Rational> t;
      for (int j = 0; j < s.k(); ++j) q.push_back(nonzero());
      for (std::size_t b = 0; b < g.num_bullets(); ++b) t.push_back(nonzero());
      auto rho = trivialize_fiber(g, q, t);
      ++total;
      if (recover_vertex_values(g, rho) == t && qtilde_values(g, rho) == q && lies_in_z(g, rho)) ++exact;
    }
  }
  return {dev <= 1e-8 && exact == total,
          "beta(phi) deviation " + fmt(dev) + ", " + std::to_string(exact) + "/" + std::to_string(total) + " exact trivializations"};
}

Outcome non_injectivity() {
  MirrorGraph g(ParabolicSpec(2, {1, 2}));
  int hits = 0;
  for (int x : {-2, -1, 0, 1, 3}) {
    auto rho = constant_assignment(g, Rational(0));
    rho.values[*g.arrow_index("d(1,2)")] = -x;
    rho.values[*g.arrow_index("c(2,1)")] = x;
    rho.values[*g.arrow_index("c(2,2)")] = -x;
    rho.values[*g.arrow_index("d(2,2)")] = x;
    if (canonical_flag(phi(g, rho)) == Matrix<Rational>::identity(3)) ++hits;
  }
  return {hits == 5, std::to_string(hits) + "/5 points map to the identity coset"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Gr2(C4) positive point via CLI", gr24_positive_point},
      {"Gr2(C4) base solution and q~ scaling", gr24_base_solution},
      {"complex critical point counts", complex_counts},
      {"points outside the open stratum", missing_points},
      {"kappa and quantum relations", quantum_relations},
      {"Peterson residual, matrix identity, q recovery", peterson_identities},
      {"G recursions and diagonal constancy", recursions},
      {"convexity and uniqueness", convexity_uniqueness},
      {"classical limit", classical_limit},
      {"positivity and cells", positivity_and_cells},
      {"beta/phi and trivialization roundtrips", roundtrips},
      {"rho_x collapse to the identity coset", non_injectivity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1 << "  " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
