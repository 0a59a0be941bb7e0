#include "mirror/peterson_map.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace mirror;
using Catch::Approx;

namespace {

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

// The Gr_2(C^4) family [[1,0,s^2,0],[0,1,r2 s,s^2],[0,0,1,r2 s],[0,0,0,1]].
template <Scalar S>
Matrix<S> gr24_family(const S& s, const S& r2) {
  auto u = Matrix<S>::identity(4);
  u(0, 2) = s * s;
  u(1, 2) = r2 * s;
  u(1, 3) = s * s;
  u(2, 3) = r2 * s;
  return u;
}

Matrix<GaussianRational> gr24_missing(int sign) {
  auto u = Matrix<GaussianRational>::identity(4);
  u(0, 2) = GaussianRational(0, sign);
  u(1, 3) = GaussianRational(0, sign);
  return u * word_matrix<GaussianRational>(3, {1, 3});
}

ArrowAssignment<Rational> rho_x(const MirrorGraph& g, int x) {
  auto rho = constant_assignment(g, Rational(0));
  rho.values[*g.arrow_index("d(1,2)")] = -x;
  rho.values[*g.arrow_index("c(2,1)")] = x;
  rho.values[*g.arrow_index("c(2,2)")] = -x;
  rho.values[*g.arrow_index("d(2,2)")] = x;
  return rho;
}

// A random point of Z with rational arrows, through the vertex trivialization.
ArrowAssignment<Rational> random_rational_point(const MirrorGraph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::vector<Rational> q, t;
  for (int j = 0; j < g.spec().k(); ++j) q.emplace_back(num(rng), num(rng));
  for (std::size_t b = 0; b < g.num_bullets(); ++b) t.emplace_back(num(rng), num(rng));
  return trivialize_fiber(g, q, t);
}

}  // namespace

TEST_CASE("phi on small examples") {
  MirrorGraph p1(ParabolicSpec(1, {1}));
  auto rho = constant_assignment(p1, Rational(0));
  rho.values[*p1.arrow_index("c(1,1)")] = Rational(3, 7);
  rho.values[*p1.arrow_index("d(1,2)")] = 5;
  CHECK(phi(p1, rho) == x_matrix<Rational>(1, 1, Rational(3, 7)));

  MirrorGraph f3(ParabolicSpec(2, {1, 2}));
  for (int x : {-2, -1, 0, 1, 3}) {
    auto m = phi(f3, rho_x(f3, x));
    CHECK(same_flag(m, Matrix<Rational>::identity(3)));
    CHECK(canonical_flag(m) == Matrix<Rational>::identity(3));
  }

  MirrorGraph gr(ParabolicSpec(3, {2}));
  auto bad = constant_assignment(gr, 1.0);
  bad.values[*gr.arrow_index("d(3,2)")] = 2.0;
  CHECK_THROWS_AS(phi(gr, bad), std::invalid_argument);
}

TEST_CASE("phi lands in the opposite cell of w_P and matches u") {
  std::mt19937_64 rng(3);
  for (const auto& s : specs_up_to(4)) {
    MirrorGraph g(s);
    for (int trial = 0; trial < 3; ++trial) {
      auto rho = random_rational_point(g, rng);
      INFO(s.label());
      Matrix<Rational> u = phi(g, rho) * longest_element_matrix<Rational>(s).inverse();
      CHECK(is_upper_unipotent(u));
      CHECK(u == u_matrix(g, rho));
      CHECK(phi_consistency(g, rho) == 0.0);
    }
  }
}

TEST_CASE("Gr_2(C^4): the positive point and the s-family") {
  const double r2 = std::sqrt(2.0);
  MirrorGraph g(ParabolicSpec(3, {2}));
  auto rep = solve_positive_fiber(g, {1.0});
  REQUIRE(rep.converged);
  Matrix<double> flag = phi(g, rep.rho);
  Matrix<double> u = flag * longest_element_matrix<double>(g.spec()).inverse();
  CHECK(max_abs_difference(u, gr24_family(1.0, r2)) < 1e-12);
  CHECK(same_flag(flag, gr24_family(1.0, r2) * word_matrix<double>(3, {1, 3})));

  auto report = verify_peterson_identities(g, rep.rho);
  CHECK(report.passed());
  CHECK(m_function(flag, interval_word(2, 1), 2) == Approx(r2).margin(1e-12));

  // beta of the family point at s with q = s^4: interior arrows s/sqrt2, c(2,1) = d(3,3) = 2s/sqrt2.
  for (double sv : {0.5, 1.0, 2.0}) {
    auto h = gr24_family(sv, r2) * word_matrix<double>(3, {1, 3});
    auto rho = beta(g, h, {std::pow(sv, 4)});
    for (const char* name : {"c(3,1)", "d(3,2)", "c(3,2)", "d(2,2)"}) CHECK(rho.at(g, name) == Approx(sv / r2).margin(1e-12));
    for (const char* name : {"c(2,1)", "d(3,3)"}) CHECK(rho.at(g, name) == Approx(2 * sv / r2).margin(1e-12));
    CHECK(classify_boundary(g, rho) == std::vector<int>{});
  }
  // Complex s: every point of the family is a critical point.
  Complex sc = std::polar(1.3, 0.4);
  auto hc = gr24_family<Complex>(sc, Complex(r2)) * word_matrix<Complex>(3, {1, 3});
  auto rhoc = beta(g, hc, {sc * sc * sc * sc});
  CHECK(max_magnitude(critical_residual(g, rhoc)) < 1e-12);
  CHECK(verify_peterson_identities(g, rhoc).passed());
}

TEST_CASE("negative control: a non-critical point is not on the Peterson variety") {
  MirrorGraph g(ParabolicSpec(3, {2}));
  auto ones = constant_assignment(g, 1.0);
  auto report = verify_peterson_identities(g, ones);
  CHECK_FALSE(report.check("peterson_residual").passed);
  CHECK(report.check("peterson_residual").deviation > 0.1);
  CHECK_FALSE(report.passed());
}

TEST_CASE("Peterson identities at positive critical points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.05, 10.0);
  for (const auto& s : specs_up_to(4)) {
    MirrorGraph g(s);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<double> q;
      for (int j = 0; j < s.k(); ++j) q.push_back(unif(rng));
      auto rep = solve_positive_fiber(g, q);
      REQUIRE(rep.converged);
      auto report = verify_peterson_identities(g, rep.rho);
      INFO(s.label());
      for (const auto& c : report.checks) {
        INFO(c.name << " " << c.deviation);
        CHECK(c.passed);
      }
    }
  }
  MirrorGraph sl3(ParabolicSpec(2, {1, 2}));
  CHECK(verify_peterson_identities(sl3, solve_positive_fiber(sl3, {1.0, 1.0}).rho).passed());
}

TEST_CASE("kappa carries E to G at critical points") {
  for (const auto& s : specs_up_to(4)) {
    MirrorGraph g(s);
    GeneratorSet gens(s);
    EPolynomials E(gens);
    GPolynomials G(g);
    auto image = kappa_image(g, gens);
    std::vector<double> q;
    for (int j = 0; j < s.k(); ++j) q.push_back(0.5 + j);
    auto rep = solve_positive_fiber(g, q);
    auto values = kappa_values(image, rep.rho);
    INFO(s.label());
    for (int j = 1; j <= s.k() + 1; ++j)
      for (int l = 1; l <= s.nj(j); ++l)
        CHECK(E(j, l).evaluate(values) == Approx(G.evaluate(s.nj(j), s.nj(j), l, rep.rho)).margin(1e-9));
    for (int l = 1; l <= s.dim(); ++l) CHECK(std::abs(E(s.k() + 1, l).evaluate(values)) < 1e-9);
    // Second recursion and constant diagonals hold on Z^crit.
    for (std::size_t v : g.bullets()) {
      const Vertex& x = g.vertices()[v];
      for (int l = 0; l <= x.r; ++l) CHECK(std::abs(G.second_recursion(x.m, x.r, l).evaluate(rep.rho.values)) < 1e-9);
    }
    for (int j = 1; j <= s.k(); ++j)
      for (int p = 1; p < s.block_length(j + 1); ++p)
        for (int l = 0; l <= s.nj(j); ++l)
          CHECK(G.evaluate(s.nj(j) + p, s.nj(j), l, rep.rho) == Approx(G.evaluate(s.nj(j), s.nj(j), l, rep.rho)).margin(1e-9));
  }
}

TEST_CASE("Deodhar factorization recovers the column factors") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unif(0.2, 5.0);
  for (const auto& s : specs_up_to(4)) {
    MirrorGraph g(s);
    std::vector<double> q;
    for (int j = 0; j < s.k(); ++j) q.push_back(unif(rng));
    auto rho = solve_positive_fiber(g, q).rho;
    // Expected parameters: column by column, c_{m,r} for m > n_j then c~_{n_j,r}.
    std::vector<double> expected;
    for (int j = 1; j <= s.k(); ++j)
      for (int r = s.nj(j - 1) + 1; r <= s.nj(j); ++r) {
        for (int m = s.n(); m > s.nj(j); --m) expected.push_back(arrow_value(g, rho, ArrowKind::c, m, r));
        expected.push_back(ctilde_value(g, rho, s.nj(j), r));
      }
    auto pat = positive_pattern(s);
    CHECK(pat.j_minus.empty());
    CHECK(pat.j_circ.size() == pat.word.size() - longest_word(s.levi_indices()).size());
    auto t = deodhar_factorize(phi(g, rho), pat);
    INFO(s.label());
    REQUIRE(t.size() == expected.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(t[i] == Approx(expected[i]).epsilon(1e-10));
      CHECK(t[i] > 0.0);
    }
    CHECK(same_flag(deodhar_product(pat, t), phi(g, rho)));
  }

  // Exact roundtrip through an arbitrary stratum point.
  ParabolicSpec gr(3, {2});
  auto pat = positive_pattern(gr);
  REQUIRE(pat.j_plus == std::vector<std::size_t>{2, 5});
  std::vector<Rational> t{Rational(2), Rational(-1, 3), Rational(5), Rational(7, 2)};
  auto h = deodhar_product(pat, t) * y_matrix<Rational>(3, 2, Rational(4)) * y_matrix<Rational>(3, 1, Rational(-2));
  CHECK(deodhar_factorize(h, pat) == t);
}

TEST_CASE("points outside the open stratum") {
  ParabolicSpec gr(3, {2});
  for (int sign : {1, -1}) {
    auto h = gr24_missing(sign);
    CHECK(on_peterson_variety(h));
    CHECK_THROWS_AS(deodhar_factorize(h, positive_pattern(gr)), NotInStratum);
  }
  // w = e inside w_0: all positions need nonzero parameters.
  auto all_x = positive_pattern(3, longest_word(3), identity_permutation(3));
  CHECK(all_x.j_plus.empty());
  CHECK_THROWS_AS(deodhar_factorize(Matrix<Rational>::identity(4), all_x), NotInStratum);
}

TEST_CASE("beta inverts phi on positive critical points") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unif(0.05, 10.0);
  for (const auto& s : specs_up_to(4)) {
    MirrorGraph g(s);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<double> q;
      for (int j = 0; j < s.k(); ++j) q.push_back(unif(rng));
      auto rho = solve_positive_fiber(g, q).rho;
      auto flag = phi(g, rho);
      auto back = beta(g, flag, qtilde_values(g, rho));
      INFO(s.label());
      double scale = max_abs(rho.values);
      for (std::size_t a = 0; a < g.num_arrows(); ++a) CHECK(std::abs(back[a] - rho[a]) <= 1e-10 * scale);
      CHECK(same_flag(phi(g, back), flag));
      auto qy = peterson_q(s, flag, positive_pattern(s));
      for (int j = 0; j < s.k(); ++j) CHECK(qy[static_cast<std::size_t>(j)] == Approx(q[static_cast<std::size_t>(j)]).epsilon(1e-10));
    }
  }
}

TEST_CASE("total positivity of the image") {
  for (const auto& s : {ParabolicSpec(2, {1, 2}), ParabolicSpec(3, {1, 2, 3}), ParabolicSpec(4, {1, 2, 3, 4})}) {
    MirrorGraph g(s);
    for (double q0 : {0.1, 1.0, 7.0}) {
      auto rho = solve_positive_fiber(g, std::vector<double>(static_cast<std::size_t>(s.k()), q0)).rho;
      CHECK(is_totally_nonnegative(u_matrix(g, rho)));
    }
  }
}

TEST_CASE("positive cells") {
  MirrorGraph sl3(ParabolicSpec(2, {1, 2}));
  auto top = positive_cell_param(sl3, {}, {1.0, 1.0});
  CHECK(same_flag(top.g, phi(sl3, solve_positive_fiber(sl3, {1.0, 1.0}).rho)));
  CHECK(free_q_indices(sl3.spec(), ParabolicSpec(2, {})).size() == 2);

  for (const auto& s : specs_up_to(3)) {
    MirrorGraph g(s);
    auto point = positive_cell_param(g, s.ip(), {});
    CHECK(same_flag(point.g, longest_element_matrix<double>(s)));
    for (const auto& ipp : subsets_of(s.ip())) {
      ParabolicSpec pp(s.n(), ipp);
      auto free = free_q_indices(s, pp);
      if (free.empty()) continue;
      std::vector<Matrix<double>> seen;
      for (double base : {0.3, 1.0, 3.0}) {
        std::vector<double> values;
        for (std::size_t i = 0; i < free.size(); ++i) values.push_back(base * (1.0 + 0.5 * static_cast<double>(i)));
        auto pt = positive_cell_param(g, ipp, values);
        INFO(s.label() << " P'=" << pp.label());
        CHECK(on_peterson_variety(pt.g));
        auto back = cell_coords(pt);
        REQUIRE(back.size() == values.size());
        for (std::size_t i = 0; i < values.size(); ++i) CHECK(back[i] == Approx(values[i]).epsilon(1e-9));
        for (const auto& other : seen) CHECK_FALSE(same_flag(other, pt.g));
        seen.push_back(pt.g);
        auto rep = solve_fiber(g, *pt.q);
        CHECK(classify_boundary(g, rep.rho) == ipp);
      }
    }
  }
  CHECK_THROWS_AS(positive_cell_param(sl3, {}, {1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(positive_cell_param(sl3, {}, {1.0}), std::invalid_argument);
}

TEST_CASE("cell enumeration matches the faces of the cube") {
  CHECK(cube_face_counts(1) == std::vector<std::uint64_t>{2, 1});
  CHECK(cube_face_counts(2) == std::vector<std::uint64_t>{4, 4, 1});
  CHECK(cube_face_counts(3) == std::vector<std::uint64_t>{8, 12, 6, 1});
  for (int n = 1; n <= 6; ++n) {
    auto counts = cube_face_counts(n);
    std::uint64_t total = 0;
    for (int m = 0; m <= n; ++m) {
      // C(n,m) 2^{n-m}
      std::uint64_t binom = 1;
      for (int i = 1; i <= m; ++i) binom = binom * static_cast<std::uint64_t>(n - m + i) / static_cast<std::uint64_t>(i);
      CHECK(counts[static_cast<std::size_t>(m)] == binom << (n - m));
      total += counts[static_cast<std::size_t>(m)];
    }
    std::uint64_t three = 1;
    for (int i = 0; i < n; ++i) three *= 3;
    CHECK(total == three);
  }
  auto cells = enumerate_cells(2);
  CHECK(cells.size() == 9);
  CHECK(cells.front().dim == 0);
  CHECK_THROWS_AS(enumerate_cells(13), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_cells(0), std::invalid_argument);
}
