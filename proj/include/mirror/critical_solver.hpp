#pragma once

// Critical points of the phase function F = sum of arrow values on the
// fibers of q~. In logarithmic vertex coordinates T (rho_a = e^{T_h - T_t},
// stars pinned by Q~) F is strictly convex on the positive part, so damped
// Newton finds the unique positive critical point. Boundary fibers split
// into independent subgraphs. Complex critical points on tiny graphs are
// found by multi-start Newton on the gradient system.

#include "mirror/mirror_graph.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/LU>

#include <cmath>
#include <limits>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace mirror {

template <Scalar S>
S phase_value(const ArrowAssignment<S>& rho) {
  S total(0);
  for (const S& x : rho.values) total += x;
  return total;
}

/// Per bullet (bullets() order): incoming minus outgoing arrow values,
/// which is dF/dT_v in log coordinates.
template <Scalar S>
std::vector<S> critical_residual(const MirrorGraph& g, const ArrowAssignment<S>& rho) {
  std::vector<S> out;
  for (std::size_t v : g.bullets()) {
    S r(0);
    for (std::size_t a : g.incoming(v)) r += rho[a];
    for (std::size_t a : g.outgoing(v)) r -= rho[a];
    out.push_back(r);
  }
  return out;
}

/// Log coordinates of one fiber: free bullet values, stars fixed by Q~.
template <class T>
struct LogCoordinates {
  std::vector<T> bullet;
  std::vector<T> star;  ///< star_1 .. star_{k+1}
};

/// T_{star_j} = log Q~_j + ... + log Q~_k, T_{star_{k+1}} = 0.
template <class T>
std::vector<T> star_logs(const std::vector<T>& qtilde) {
  std::vector<T> out(qtilde.size() + 1, T(0));
  for (std::size_t j = qtilde.size(); j-- > 0;) out[j] = std::log(qtilde[j]) + out[j + 1];
  return out;
}

template <class T>
std::vector<T> vertex_logs(const MirrorGraph& g, const LogCoordinates<T>& x) {
  std::vector<T> t(g.vertices().size(), T(0));
  for (std::size_t b = 0; b < g.num_bullets(); ++b) t[g.bullets()[b]] = x.bullet[b];
  for (int j = 1; j <= g.spec().k() + 1; ++j) t[g.star(j)] = x.star[static_cast<std::size_t>(j - 1)];
  return t;
}

template <class T>
ArrowAssignment<T> assignment_from_logs(const MirrorGraph& g, const LogCoordinates<T>& x) {
  auto t = vertex_logs(g, x);
  ArrowAssignment<T> rho;
  for (const Arrow& a : g.arrows()) rho.values.push_back(std::exp(t[a.head] - t[a.tail]));
  return rho;
}

/// Hessian of F in the bullet log coordinates: the graph Laplacian weighted by
/// rho, with star rows and columns removed.
template <class T>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> hessian(const MirrorGraph& g, const ArrowAssignment<T>& rho) {
  auto nb = static_cast<Eigen::Index>(g.num_bullets());
  Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> h = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>::Zero(nb, nb);
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    auto hp = g.bullet_position(g.arrows()[a].head);
    auto tp = g.bullet_position(g.arrows()[a].tail);
    if (hp) h(static_cast<Eigen::Index>(*hp), static_cast<Eigen::Index>(*hp)) += rho[a];
    if (tp) h(static_cast<Eigen::Index>(*tp), static_cast<Eigen::Index>(*tp)) += rho[a];
    if (hp && tp) {
      h(static_cast<Eigen::Index>(*hp), static_cast<Eigen::Index>(*tp)) -= rho[a];
      h(static_cast<Eigen::Index>(*tp), static_cast<Eigen::Index>(*hp)) -= rho[a];
    }
  }
  return h;
}

struct SolverConfig {
  double tol = 1e-12;
  int max_iter = 200;
  double armijo = 1e-4;
  /// Optional starting bullet logs; empty means T = 0.
  std::vector<double> start;
};

struct SolveReport {
  std::vector<double> qtilde_target;
  ArrowAssignment<double> rho;
  std::vector<double> log_bullets;
  double phase = 0.0;
  double residual = 0.0;  ///< max |critical residual|
  int iterations = 0;
  bool converged = false;
  bool hessian_always_pd = true;
  std::vector<double> qtilde;  ///< q~(rho) recovered by path products
};

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Unique positive critical point of F on the fiber q~ = Q~ (all Q~_j > 0).
/// Converged means max |dF/dT_v| <= tol * max(1, max rho_a).
inline SolveReport solve_positive_fiber(const MirrorGraph& g, const std::vector<double>& qtilde,
                                        const SolverConfig& cfg = {}) {
  if (static_cast<int>(qtilde.size()) != g.spec().k()) throw std::invalid_argument("solve: need k values of Q~");
  for (double q : qtilde)
    if (!(q > 0.0) || !std::isfinite(q)) throw std::invalid_argument("solve: Q~ components must be positive");

  LogCoordinates<double> x{std::vector<double>(g.num_bullets(), 0.0), star_logs(qtilde)};
  if (!cfg.start.empty()) {
    if (cfg.start.size() != g.num_bullets()) throw std::invalid_argument("solve: start needs one value per bullet");
    x.bullet = cfg.start;
  }
  SolveReport rep;
  rep.qtilde_target = qtilde;
  auto nb = static_cast<Eigen::Index>(g.num_bullets());

  auto eval = [&](const LogCoordinates<double>& y) { return phase_value(assignment_from_logs(g, y)); };

  for (rep.iterations = 0; rep.iterations <= cfg.max_iter; ++rep.iterations) {
    auto rho = assignment_from_logs(g, x);
    auto grad = critical_residual(g, rho);
    double scale = std::max(1.0, max_abs(rho.values));
    if (max_abs(grad) <= cfg.tol * scale) {
      rep.converged = true;
      break;
    }
    if (rep.iterations == cfg.max_iter) break;
    Eigen::VectorXd gvec(nb);
    for (Eigen::Index i = 0; i < nb; ++i) gvec(i) = grad[static_cast<std::size_t>(i)];
    Eigen::LLT<Eigen::MatrixXd> llt(hessian(g, rho));
    Eigen::VectorXd dir;
    if (llt.info() == Eigen::Success) {
      dir = -llt.solve(gvec);
    } else {
      rep.hessian_always_pd = false;
      dir = -gvec;
    }
    double f0 = phase_value(rho);
    double slope = gvec.dot(dir);
    LogCoordinates<double> trial = x;
    auto step_to = [&](double alpha) {
      for (Eigen::Index i = 0; i < nb; ++i)
        trial.bullet[static_cast<std::size_t>(i)] = x.bullet[static_cast<std::size_t>(i)] + alpha * dir(i);
    };
    if (-slope <= 1e3 * std::numeric_limits<double>::epsilon() * std::abs(f0)) {
      // The predicted decrease is below the rounding of F, so Armijo cannot
      // judge the step; keep the full Newton step only if it shrinks the gradient.
      step_to(1.0);
      if (max_abs(critical_residual(g, assignment_from_logs(g, trial))) >= max_abs(grad)) break;
    } else {
      double alpha = 1.0;
      bool accepted = false;
      while (alpha > 1e-12) {
        step_to(alpha);
        double f1 = eval(trial);
        if (std::isfinite(f1) && f1 <= f0 + cfg.armijo * alpha * slope) {
          accepted = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!accepted) break;
    }
    x = trial;
  }
  rep.log_bullets = x.bullet;
  rep.rho = assignment_from_logs(g, x);
  rep.phase = phase_value(rep.rho);
  rep.residual = max_abs(critical_residual(g, rep.rho));
  rep.qtilde = qtilde_values(g, rep.rho);
  if (!rep.converged) rep.iterations = std::min(rep.iterations, cfg.max_iter);
  return rep;
}

/// I^{P'} = {n_j : Q~_j = 0}.
inline std::vector<int> boundary_indices(const ParabolicSpec& s, const std::vector<double>& qtilde) {
  std::vector<int> out;
  for (int j = 1; j <= s.k(); ++j)
    if (qtilde[static_cast<std::size_t>(j - 1)] == 0.0) out.push_back(s.nj(j));
  return out;
}

/// Positive critical point of Z_(P,P') with I^{P'} = {n_j : Q~_j = 0}: arrows
/// touching V^{P'}_bullet vanish and every remaining component is solved on
/// its own smaller graph.
inline SolveReport solve_boundary_fiber(const MirrorGraph& g, const std::vector<double>& qtilde,
                                        const SolverConfig& cfg = {}) {
  if (static_cast<int>(qtilde.size()) != g.spec().k()) throw std::invalid_argument("solve: need k values of Q~");
  for (double q : qtilde)
    if (!(q >= 0.0) || !std::isfinite(q)) throw std::invalid_argument("solve: Q~ components must be nonnegative");

  SolveReport rep;
  rep.qtilde_target = qtilde;
  rep.rho = constant_assignment(g, 0.0);
  rep.converged = true;
  for (const auto& comp : subgraph_decomposition(g, boundary_indices(g.spec(), qtilde))) {
    MirrorGraph sub(comp.sub_spec);
    std::vector<double> sub_q;
    for (int j : comp.qtilde_index) sub_q.push_back(qtilde[static_cast<std::size_t>(j - 1)]);
    SolverConfig sub_cfg = cfg;
    sub_cfg.start.clear();
    SolveReport part = solve_positive_fiber(sub, sub_q, sub_cfg);
    for (std::size_t a = 0; a < comp.arrow_map.size(); ++a) rep.rho[comp.arrow_map[a]] = part.rho[a];
    rep.iterations = std::max(rep.iterations, part.iterations);
    rep.converged = rep.converged && part.converged;
    rep.hessian_always_pd = rep.hessian_always_pd && part.hessian_always_pd;
  }
  rep.phase = phase_value(rep.rho);
  rep.residual = max_abs(critical_residual(g, rep.rho));
  rep.qtilde = qtilde_values(g, rep.rho);
  return rep;
}

/// Dispatches to the positive or boundary solver.
inline SolveReport solve_fiber(const MirrorGraph& g, const std::vector<double>& qtilde, const SolverConfig& cfg = {}) {
  for (double q : qtilde)
    if (q == 0.0) return solve_boundary_fiber(g, qtilde, cfg);
  return solve_positive_fiber(g, qtilde, cfg);
}

// ---------------------------------------------------------------------------
// Complex critical points

struct EnumerationConfig {
  int starts = 200;
  std::uint64_t seed = 7;
  int max_iter = 100;
  double tol = 1e-10;
  double dedupe = 1e-6;
  double log_radius = 1.5;  ///< starts draw log-modulus from [-r, r]
};

inline constexpr int kMaxEnumerationRank = 3;

/// Distinct critical points in the fiber q~ = Q~ found by Newton from random
/// starts in complex log coordinates. The count is a lower bound; every
/// returned point has max residual <= tol * max(1, max_j |Q~_j|^{1/deg q~_j}).
inline std::vector<ArrowAssignment<Complex>> enumerate_complex_critical(const MirrorGraph& g,
                                                                        const std::vector<Complex>& qtilde,
                                                                        const EnumerationConfig& cfg = {}) {
  if (g.spec().n() > kMaxEnumerationRank) throw std::invalid_argument("enumerate_complex_critical: limited to n <= 3");
  if (static_cast<int>(qtilde.size()) != g.spec().k()) throw std::invalid_argument("enumerate: need k values of Q~");
  for (const auto& q : qtilde)
    if (q == Complex(0.0)) throw std::invalid_argument("enumerate: Q~ components must be nonzero");

  using CMat = Eigen::MatrixXcd;
  using CVec = Eigen::VectorXcd;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> modulus(-cfg.log_radius, cfg.log_radius);
  std::uniform_real_distribution<double> phase(-M_PI, M_PI);
  auto nb = static_cast<Eigen::Index>(g.num_bullets());
  std::vector<ArrowAssignment<Complex>> found;

  auto max_mag = [](const std::vector<Complex>& v) {
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
  };

  // Critical points in the fiber have arrow values of size about |Q~_j|^{1/deg q~_j};
  // residuals are measured on that scale, and runs escaping far beyond it are
  // discarded rather than accepted on a relative test.
  double typical = 1.0;
  for (int j = 1; j <= g.spec().k(); ++j) {
    int deg = g.spec().nj(j + 1) - g.spec().nj(j - 1);
    typical = std::max(typical, std::pow(std::abs(qtilde[static_cast<std::size_t>(j - 1)]), 1.0 / deg));
  }

  for (int s = 0; s < cfg.starts; ++s) {
    LogCoordinates<Complex> x{std::vector<Complex>(g.num_bullets()), star_logs(qtilde)};
    for (auto& t : x.bullet) t = Complex(modulus(rng), phase(rng));
    bool ok = false;
    for (int it = 0; it < cfg.max_iter; ++it) {
      auto rho = assignment_from_logs(g, x);
      auto res = critical_residual(g, rho);
      double size = max_mag(rho.values);
      if (!std::isfinite(size) || size > 1e6 * typical) break;
      if (max_mag(res) <= cfg.tol * typical) {
        ok = true;
        break;
      }
      CMat jac = hessian(g, rho);
      CVec rhs(nb);
      for (Eigen::Index i = 0; i < nb; ++i) rhs(i) = -res[static_cast<std::size_t>(i)];
      Eigen::PartialPivLU<CMat> lu(jac);
      CVec step = lu.solve(rhs);
      if (!step.allFinite()) break;
      double len = step.cwiseAbs().maxCoeff();
      if (len > 1.0) step *= 1.0 / len;  // keep steps inside one chart of the logarithm
      for (Eigen::Index i = 0; i < nb; ++i) x.bullet[static_cast<std::size_t>(i)] += step(i);
    }
    if (!ok) continue;
    auto rho = assignment_from_logs(g, x);
    double scale = std::max(typical, max_mag(rho.values));
    bool duplicate = false;
    for (const auto& other : found) {
      double d = 0.0;
      for (std::size_t a = 0; a < rho.values.size(); ++a) d = std::max(d, std::abs(rho[a] - other[a]));
      if (d <= cfg.dedupe * scale) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) found.push_back(rho);
  }
  return found;
}

}  // namespace mirror
