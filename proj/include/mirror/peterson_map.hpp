#pragma once

// The map phi: Z -> SL(n+1)/B^-, the matrix form of the Peterson condition,
// Deodhar factorizations along positive subexpressions, the inverse beta on
// the open stratum, and the cells of the totally nonnegative Peterson variety.

#include "mirror/critical_solver.hpp"
#include "mirror/flag_core.hpp"
#include "mirror/mirror_graph.hpp"
#include "mirror/symbolic.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirror {

template <Scalar S>
S ctilde_value(const MirrorGraph& g, const ArrowAssignment<S>& rho, int m, int r) {
  return ctilde(g, m, r).evaluate(rho.values);
}

/// wdot_P for the block reduced word of w_P.
template <Scalar S>
Matrix<S> longest_element_matrix(const ParabolicSpec& spec) {
  return word_matrix<S>(spec.n(), longest_word(spec.levi_indices()));
}

/// g(rho) = g_1 ... g_n. Column r in block j contributes
/// x_n(c_{n,r}) ... x_{n_j+1}(c_{n_j+1,r}) x_{n_j}(c~_{n_j,r}) sdot_{n_j-1} ... sdot_r;
/// columns r > n_k contribute sdot_n ... sdot_r. No box-relation check.
template <Scalar S>
Matrix<S> phi_matrix(const MirrorGraph& g, const ArrowAssignment<S>& rho) {
  const ParabolicSpec& s = g.spec();
  int n = s.n();
  auto out = Matrix<S>::identity(static_cast<std::size_t>(n + 1));
  for (int j = 1; j <= s.k(); ++j)
    for (int r = s.nj(j - 1) + 1; r <= s.nj(j); ++r) {
      for (int m = n; m > s.nj(j); --m) out = out * x_matrix<S>(n, m, arrow_value(g, rho, ArrowKind::c, m, r));
      out = out * x_matrix<S>(n, s.nj(j), ctilde_value(g, rho, s.nj(j), r));
      for (int i = s.nj(j) - 1; i >= r; --i) out = out * sdot_matrix<S>(n, i);
    }
  for (int r = s.nj(s.k()) + 1; r <= n; ++r)
    for (int i = n; i >= r; --i) out = out * sdot_matrix<S>(n, i);
  return out;
}

/// phi(rho) as a matrix representative of g(rho)B^-. Rejects rho off Z.
template <Scalar S>
Matrix<S> phi(const MirrorGraph& g, const ArrowAssignment<S>& rho, double tol = kDefaultZeroTolerance) {
  if (rho.values.size() != g.num_arrows()) throw std::invalid_argument("phi: assignment has the wrong number of arrows");
  if (!lies_in_z(g, rho, tol)) throw std::invalid_argument("phi: assignment violates a box relation");
  return phi_matrix(g, rho);
}

/// u(rho) from the column blocks of G-polynomials.
template <Scalar S>
Matrix<S> u_matrix(const MirrorGraph& g, const ArrowAssignment<S>& rho) {
  GPolynomials G(g);
  return evaluate_matrix(u_matrix_symbolic(g, G), rho.values);
}

/// max |g(rho) wdot_P^{-1} - u(rho)|.
template <Scalar S>
double phi_consistency(const MirrorGraph& g, const ArrowAssignment<S>& rho) {
  Matrix<S> lhs = phi_matrix(g, rho) * longest_element_matrix<S>(g.spec()).inverse();
  return (lhs - u_matrix(g, rho)).max_abs();
}

template <Scalar S>
bool is_upper_unipotent(const Matrix<S>& m, double tol = kDefaultZeroTolerance) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!is_zero(m(i, j) - S(i == j ? 1 : 0), tol)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Matrix form of the Peterson condition: u (f + A_+ + Q) = f u

/// A_+: block b (columns n_{b-1}+1..n_b) has only its last column, with
/// -sigma~^{(b)}_{l_b-i+1}(rho) in row n_{b-1}+i.
template <Scalar S>
Matrix<S> a_plus_matrix(const MirrorGraph& g, const ArrowAssignment<S>& rho) {
  const ParabolicSpec& s = g.spec();
  Matrix<S> a(static_cast<std::size_t>(s.dim()), static_cast<std::size_t>(s.dim()));
  for (int b = 1; b <= s.k() + 1; ++b) {
    int lb = s.block_length(b);
    for (int i = 1; i <= lb; ++i)
      a(static_cast<std::size_t>(s.nj(b - 1) + i - 1), static_cast<std::size_t>(s.nj(b) - 1)) =
          -sigma_tilde(g, b, lb - i + 1).evaluate(rho.values);
  }
  return a;
}

/// Sign and 1-based position of the q_j entry of Q: (-1)^{l_{j+1}} at (n_{j-1}+1, n_{j+1}).
struct QEntry {
  int sign;
  int row;
  int col;
};

inline QEntry q_entry(const ParabolicSpec& s, int j) {
  if (j < 1 || j > s.k()) throw std::out_of_range("q_entry: j out of range 1..k");
  return {s.block_length(j + 1) % 2 == 0 ? 1 : -1, s.nj(j - 1) + 1, s.nj(j + 1)};
}

template <Scalar S>
Matrix<S> q_matrix(const ParabolicSpec& s, const std::vector<S>& q) {
  if (static_cast<int>(q.size()) != s.k()) throw std::invalid_argument("q_matrix: need k values");
  Matrix<S> out(static_cast<std::size_t>(s.dim()), static_cast<std::size_t>(s.dim()));
  for (int j = 1; j <= s.k(); ++j) {
    QEntry e = q_entry(s, j);
    out(static_cast<std::size_t>(e.row - 1), static_cast<std::size_t>(e.col - 1)) = S(e.sign) * q[static_cast<std::size_t>(j - 1)];
  }
  return out;
}

/// q_j read off u^{-1} f u - f at the Q positions.
template <Scalar S>
std::vector<S> q_from_unipotent(const ParabolicSpec& s, const Matrix<S>& u) {
  auto f = principal_nilpotent<S>(s.n());
  Matrix<S> x = u.inverse() * f * u - f;
  std::vector<S> q;
  for (int j = 1; j <= s.k(); ++j) {
    QEntry e = q_entry(s, j);
    q.push_back(S(e.sign) * x(static_cast<std::size_t>(e.row - 1), static_cast<std::size_t>(e.col - 1)));
  }
  return q;
}

// ---------------------------------------------------------------------------
// Deodhar strata for positive subexpressions

/// A reduced word with a subexpression: positions in j_plus carry sdot, the
/// others (j_circ) carry x_i(t) with t != 0. Positions are 0-based.
struct DeodharPattern {
  int n = 0;
  WeylWord word;
  std::vector<std::size_t> j_plus;
  std::vector<std::size_t> j_minus;  ///< always empty here
  std::vector<std::size_t> j_circ;
};

inline DeodharPattern positive_pattern(int n, const WeylWord& word, const Permutation& v) {
  if (!is_reduced(n, word)) throw std::invalid_argument("positive_pattern: word is not reduced");
  DeodharPattern p{n, word, positive_subexpression(n, word, v), {}, {}};
  std::size_t next = 0;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    if (next < p.j_plus.size() && p.j_plus[next] == pos) {
      ++next;
    } else {
      p.j_circ.push_back(pos);
    }
  }
  return p;
}

/// w_P^+ inside the block word of w_{P'}.
inline DeodharPattern positive_pattern(const ParabolicSpec& spec, const ParabolicSpec& pprime) {
  auto words = parabolic_words(spec, pprime);
  return positive_pattern(spec.n(), words.w_pprime, word_permutation(spec.n(), words.w_p));
}

inline DeodharPattern positive_pattern(const ParabolicSpec& spec) {
  return positive_pattern(spec, ParabolicSpec(spec.n(), {}));
}

/// gB^- does not lie in the stratum of the pattern.
class NotInStratum : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Product of the pattern's factors with t in j_circ order.
template <Scalar S>
Matrix<S> deodhar_product(const DeodharPattern& p, const std::vector<S>& t) {
  if (t.size() != p.j_circ.size()) throw std::invalid_argument("deodhar_product: one parameter per J-circ position");
  auto out = Matrix<S>::identity(static_cast<std::size_t>(p.n + 1));
  std::size_t next = 0;
  for (std::size_t pos = 0; pos < p.word.size(); ++pos) {
    if (next < p.j_circ.size() && p.j_circ[next] == pos) {
      out = out * x_matrix<S>(p.n, p.word[pos], t[next++]);
    } else {
      out = out * sdot_matrix<S>(p.n, p.word[pos]);
    }
  }
  return out;
}

/// Parameters t_r (r in J-circ) with gB^- = g_1 ... g_m B^-, by peeling the
/// factors off from the left. At an x-position with letter i the remaining
/// suffix w' satisfies s_i w' > w'; pick trailing columns C whose rows w'(C)
/// contain i+1 but not i. Then t = Delta_{s_i w'(C), C}(h) / Delta_{w'(C), C}(h),
/// which is the value that makes the first minor of x_i(-t) h vanish.
template <Scalar S>
std::vector<S> deodhar_factorize(const Matrix<S>& g, const DeodharPattern& p, double tol = kDefaultZeroTolerance) {
  if (!p.j_minus.empty()) throw std::invalid_argument("deodhar_factorize: only positive subexpressions are supported");
  if (g.rows() != static_cast<std::size_t>(p.n + 1)) throw std::invalid_argument("deodhar_factorize: size mismatch");
  Matrix<S> h = g;
  std::vector<S> t;
  std::size_t next = 0;
  const std::size_t size = h.rows();
  for (std::size_t pos = 0; pos < p.word.size(); ++pos) {
    int letter = p.word[pos];
    if (!(next < p.j_circ.size() && p.j_circ[next] == pos)) {
      h = sdot_inverse_matrix<S>(p.n, letter) * h;
      continue;
    }
    ++next;
    WeylWord suffix(p.word.begin() + static_cast<std::ptrdiff_t>(pos) + 1, p.word.end());
    Permutation w = word_permutation(p.n, suffix);
    auto lo = static_cast<int>(letter - 1);  // 0-based row of i
    std::optional<S> best;
    double best_rel = -1.0;
    for (std::size_t first = 1; first < size; ++first) {
      std::vector<std::size_t> cols = index_range(first, size);
      std::vector<std::size_t> rows;
      for (std::size_t c : cols) rows.push_back(static_cast<std::size_t>(w[c]));
      std::sort(rows.begin(), rows.end());
      bool has_hi = std::binary_search(rows.begin(), rows.end(), static_cast<std::size_t>(lo + 1));
      bool has_lo = std::binary_search(rows.begin(), rows.end(), static_cast<std::size_t>(lo));
      if (!has_hi || has_lo) continue;
      std::vector<std::size_t> swapped = rows;
      for (auto& r : swapped)
        if (r == static_cast<std::size_t>(lo + 1)) r = static_cast<std::size_t>(lo);
      S den = h.minor(rows, cols);
      S num = h.minor(swapped, cols);
      double scale = std::max(max_magnitude(column_plucker(h, first)), std::numeric_limits<double>::min());
      double rel = magnitude(den) / scale;
      if (is_zero(den, tol * scale)) continue;
      if (is_zero(num, tol * scale)) throw NotInStratum("deodhar_factorize: parameter at position " + std::to_string(pos + 1) + " vanishes");
      if (rel > best_rel) {
        best_rel = rel;
        best = num / den;
      }
    }
    if (!best) throw NotInStratum("deodhar_factorize: chamber minor vanishes at position " + std::to_string(pos + 1));
    t.push_back(*best);
    h = x_matrix<S>(p.n, letter, -*best) * h;
  }
  double scale = std::max(1.0, h.max_abs());
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (!is_zero(h(i, j), tol * scale)) throw NotInStratum("deodhar_factorize: remainder is not in B^-");
  return t;
}

/// q on Y for a point of the stratum of (P, P'): the Q entries of
/// u^{-1} f u - f, where u = (Deodhar representative) wdot_P^{-1}.
template <Scalar S>
std::vector<S> peterson_q(const ParabolicSpec& spec, const Matrix<S>& g, const DeodharPattern& p,
                          double tol = kDefaultZeroTolerance) {
  auto t = deodhar_factorize(g, p, tol);
  Matrix<S> u = deodhar_product(p, t) * longest_element_matrix<S>(spec).inverse();
  return q_from_unipotent(spec, u);
}

// ---------------------------------------------------------------------------
// beta: the inverse of phi on the open stratum

/// Arrow values from a flag point in Y and the open stratum of w_P^+ in w_0,
/// together with q. Vertical arrows come from the x-parameters (c~ on row
/// n_j), the rim d's from ratios of c~, the arrow leaving star_{j+1} from q_j,
/// and the remaining d's from the box relations, swept column by column.
template <Scalar S>
ArrowAssignment<S> beta(const MirrorGraph& g, const Matrix<S>& flag, const std::vector<S>& q,
                        double tol = kDefaultZeroTolerance) {
  const ParabolicSpec& s = g.spec();
  if (static_cast<int>(q.size()) != s.k()) throw std::invalid_argument("beta: need k values of q");
  DeodharPattern pat = positive_pattern(s);
  std::vector<S> t = deodhar_factorize(flag, pat, tol);

  std::vector<std::optional<S>> value(g.num_arrows());
  auto set = [&](ArrowKind kind, int m, int r, const S& x) {
    auto a = g.arrow_index(kind, m, r);
    if (!a) throw std::logic_error("beta: arrow missing from graph");
    value[*a] = x;
  };
  auto get = [&](ArrowKind kind, int m, int r) -> S {
    auto a = g.arrow_index(kind, m, r);
    if (!a || !value[*a]) throw std::logic_error("beta: arrow value not yet known");
    return *value[*a];
  };

  // The w_0 word is (s_n ... s_1)(s_n ... s_2) ... (s_n); in block r the
  // x-positions are the letters m >= n_j, for r in block j.
  std::size_t next = 0;
  std::size_t pos = 0;
  std::vector<std::vector<S>> ct(static_cast<std::size_t>(s.k() + 1));
  for (int r = 1; r <= s.n(); ++r) {
    int j = 1;
    while (j <= s.k() && s.nj(j) < r) ++j;
    for (int m = s.n(); m >= r; --m, ++pos) {
      bool is_x = next < pat.j_circ.size() && pat.j_circ[next] == pos;
      bool expect_x = j <= s.k() && m >= s.nj(j);
      if (is_x != expect_x) throw std::logic_error("beta: pattern does not match the column factors");
      if (!is_x) continue;
      const S& x = t[next++];
      if (m > s.nj(j)) {
        set(ArrowKind::c, m, r, x);
      } else {
        ct[static_cast<std::size_t>(j)].push_back(x);
      }
    }
  }

  for (int j = 1; j <= s.k(); ++j) {
    const auto& c = ct[static_cast<std::size_t>(j)];
    set(ArrowKind::c, s.nj(j), s.nj(j - 1) + 1, c.front());
    for (std::size_t p = 1; p < c.size(); ++p) set(ArrowKind::d, s.nj(j), s.nj(j - 1) + 1 + static_cast<int>(p), c[p] / c[p - 1]);
  }
  for (int j = 1; j <= s.k(); ++j) {
    S den = ct[static_cast<std::size_t>(j)].back();
    for (int i = 1; i <= s.block_length(j + 1) - 1; ++i) den *= get(ArrowKind::c, s.nj(j + 1) - i, s.nj(j));
    if (is_zero(den, 0.0)) throw std::domain_error("beta: vanishing partial product");
    set(ArrowKind::d, s.nj(j + 1) - 1, s.nj(j) + 1, q[static_cast<std::size_t>(j - 1)] / den);
  }

  std::vector<const BoxSquare*> order;
  for (const BoxSquare& b : g.squares()) order.push_back(&b);
  std::stable_sort(order.begin(), order.end(), [](const BoxSquare* a, const BoxSquare* b) {
    return a->r != b->r ? a->r < b->r : a->m < b->m;
  });
  bool progress = true;
  while (progress) {
    progress = false;
    for (const BoxSquare* b : order) {
      // c_right d_top = d_bottom c_left
      bool top = value[b->d_top].has_value();
      bool bottom = value[b->d_bottom].has_value();
      if (top == bottom) continue;
      if (!value[b->c_right] || !value[b->c_left]) continue;
      if (!top) {
        if (is_zero(*value[b->c_right], 0.0)) continue;
        value[b->d_top] = *value[b->d_bottom] * *value[b->c_left] / *value[b->c_right];
      } else {
        if (is_zero(*value[b->c_left], 0.0)) continue;
        value[b->d_bottom] = *value[b->c_right] * *value[b->d_top] / *value[b->c_left];
      }
      progress = true;
    }
  }
  ArrowAssignment<S> rho;
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    if (!value[a]) throw std::domain_error("beta: arrow " + g.arrows()[a].name() + " not determined");
    rho.values.push_back(*value[a]);
  }
  return rho;
}

// ---------------------------------------------------------------------------
// Verification at critical points

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  bool passed = false;
};

struct PetersonReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw std::out_of_range("no check named " + name);
  }
};

/// Checks at a critical point rho, each an absolute max deviation against tol:
///   peterson_residual  g(rho)^{-1} f g(rho) has no entries above the superdiagonal
///   diagram            q~(rho) equals q read on the Peterson side
///   matrix_identity    u (f + A_+ + Q) = f u with Q built from q~(rho)
///   m_function         M_{w^{[n_j]}_l omega_{n_j}}(phi(rho)) = G^{(n_j,n_j)}_l(rho)
template <Scalar S>
PetersonReport verify_peterson_identities(const MirrorGraph& g, const ArrowAssignment<S>& rho, double tol = kDefaultZeroTolerance) {
  const ParabolicSpec& s = g.spec();
  const double inf = std::numeric_limits<double>::infinity();
  PetersonReport rep;
  auto add = [&](const std::string& name, double dev) { rep.checks.push_back({name, dev, dev <= tol}); };

  Matrix<S> flag = phi(g, rho, tol);
  add("peterson_residual", max_magnitude(peterson_residual(flag)));

  auto qt = qtilde_values(g, rho);
  double diagram = inf;
  try {
    auto qy = peterson_q(s, flag, positive_pattern(s), tol);
    diagram = 0.0;
    for (std::size_t j = 0; j < qt.size(); ++j) diagram = std::max(diagram, magnitude(qt[j] - qy[j]));
  } catch (const NotInStratum&) {
  }
  add("diagram", diagram);

  Matrix<S> u = flag * longest_element_matrix<S>(s).inverse();
  auto f = principal_nilpotent<S>(s.n());
  Matrix<S> lhs = u * (f + a_plus_matrix(g, rho) + q_matrix(s, qt));
  add("matrix_identity", (lhs - f * u).max_abs());

  GPolynomials G(g);
  double mdev = 0.0;
  for (int j = 1; j <= s.k() && mdev < inf; ++j) {
    int nj = s.nj(j);
    for (int l = 1; l <= nj; ++l) {
      try {
        S m = m_function(flag, interval_word(nj, l), nj, tol);
        mdev = std::max(mdev, magnitude(m - G.evaluate(nj, nj, l, rho)));
      } catch (const std::domain_error&) {
        mdev = inf;
        break;
      }
    }
  }
  add("m_function", mdev);
  return rep;
}

/// Max over j, l of |E^{(j)}_l(kappa(rho)) - G^{(n_j,n_j)}_l(rho)| for j <= k and
/// of |E^{(k+1)}_l(kappa(rho))|, l = 1..n_j. Zero on Z^crit.
template <Scalar S>
double quantum_relation_deviation(const MirrorGraph& g, const ArrowAssignment<S>& rho) {
  const ParabolicSpec& s = g.spec();
  GeneratorSet gens(s);
  EPolynomials E(gens);
  GPolynomials G(g);
  auto values = kappa_values(kappa_image(g, gens), rho);
  double dev = 0.0;
  for (int j = 1; j <= s.k(); ++j)
    for (int l = 1; l <= s.nj(j); ++l)
      dev = std::max(dev, magnitude(E(j, l).evaluate(values) - G.evaluate(s.nj(j), s.nj(j), l, rho)));
  for (int l = 1; l <= s.dim(); ++l) dev = std::max(dev, magnitude(E(s.k() + 1, l).evaluate(values)));
  return dev;
}

// ---------------------------------------------------------------------------
// Totally nonnegative cells

template <Scalar S>
struct PetersonPoint {
  Matrix<S> g;
  std::optional<ParabolicSpec> p;
  std::optional<ParabolicSpec> pprime;
  std::optional<std::vector<S>> q;
};

/// The indices j with n_j in I^P \ I^{P'}, 1-based.
inline std::vector<int> free_q_indices(const ParabolicSpec& spec, const ParabolicSpec& pprime) {
  if (!pprime.is_subset_of(spec)) throw std::invalid_argument("I^{P'} must be a subset of I^P");
  std::vector<int> out;
  for (int j = 1; j <= spec.k(); ++j)
    if (!pprime.in_ip(spec.nj(j))) out.push_back(j);
  return out;
}

/// Point of Y_(P,P'),>0 with the given positive q-values for n_j in I^P \ I^{P'}
/// (in increasing j): phi of the positive critical point of Z_(P,P').
inline PetersonPoint<double> positive_cell_param(const MirrorGraph& g, const std::vector<int>& ipprime,
                                                 const std::vector<double>& values, const SolverConfig& cfg = {}) {
  const ParabolicSpec& s = g.spec();
  ParabolicSpec pprime(s.n(), ipprime);
  auto free = free_q_indices(s, pprime);
  if (values.size() != free.size()) throw std::invalid_argument("positive_cell_param: one value per index of I^P \\ I^{P'}");
  std::vector<double> q(static_cast<std::size_t>(s.k()), 0.0);
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (!(values[i] > 0.0)) throw std::invalid_argument("positive_cell_param: values must be positive");
    q[static_cast<std::size_t>(free[i] - 1)] = values[i];
  }
  SolveReport rep = solve_fiber(g, q, cfg);
  if (!rep.converged) throw std::runtime_error("positive_cell_param: solver did not converge");
  return {phi(g, rep.rho), s, pprime, q};
}

/// Inverse of positive_cell_param: the q-values of the free indices, read on
/// the Peterson side through the Deodhar factorization for (P, P').
template <Scalar S>
std::vector<S> cell_coords(const PetersonPoint<S>& pt, double tol = kDefaultZeroTolerance) {
  if (!pt.p || !pt.pprime) throw std::invalid_argument("cell_coords: point carries no stratum label");
  auto q = peterson_q(*pt.p, pt.g, positive_pattern(*pt.p, *pt.pprime), tol);
  std::vector<S> out;
  for (int j : free_q_indices(*pt.p, *pt.pprime)) out.push_back(q[static_cast<std::size_t>(j - 1)]);
  return out;
}

/// Cell (P, P') labelled by the cube face F_(J, K) with J = I^{P'}, K = I^P.
struct CellLabel {
  std::vector<int> j;
  std::vector<int> k;
  int dim = 0;
};

inline constexpr int kMaxCellRank = 12;

/// All pairs J within K within {1..n}, ordered by K then J (subsets by bit mask).
inline std::vector<CellLabel> enumerate_cells(int n) {
  if (n < 1 || n > kMaxCellRank) throw std::invalid_argument("enumerate_cells: need 1 <= n <= 12");
  std::vector<CellLabel> out;
  auto from_mask = [n](std::uint32_t mask) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) s.push_back(i);
    return s;
  };
  for (std::uint32_t kmask = 0; kmask < (1u << n); ++kmask)
    for (std::uint32_t jmask = 0; jmask < (1u << n); ++jmask) {
      if ((jmask & ~kmask) != 0) continue;
      out.push_back({from_mask(jmask), from_mask(kmask), __builtin_popcount(kmask & ~jmask)});
    }
  return out;
}

/// Number of cells of each dimension 0..n.
inline std::vector<std::uint64_t> cube_face_counts(int n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n + 1), 0);
  for (const auto& c : enumerate_cells(n)) ++counts[static_cast<std::size_t>(c.dim)];
  return counts;
}

}  // namespace mirror
