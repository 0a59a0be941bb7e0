#pragma once

// Polynomials on Z and in the quantum cohomology generators: the modified
// arrows c~ and d~, the column-sum polynomials G^{(m,r)}_l, the quantum
// elementary symmetric polynomials E^{(j)}_l, the substitution kappa and the
// unipotent matrix u built from them.
//
// Arrow polynomials use the arrow index of a MirrorGraph as variable id.

#include "mirror/flag_core.hpp"
#include "mirror/mirror_graph.hpp"
#include "mirror/sparse_poly.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace mirror {

inline SparsePoly arrow_poly(const MirrorGraph& g, ArrowKind kind, int m, int r) {
  auto a = g.arrow_index(kind, m, r);
  return a ? SparsePoly::variable(static_cast<int>(*a)) : SparsePoly();
}

inline std::string arrow_name(const MirrorGraph& g, int id) { return g.arrows().at(static_cast<std::size_t>(id)).name(); }

/// deg c~_{m,r}: p when m = n_j and r = n_{j-1} + p, otherwise 1.
inline int ctilde_degree(const ParabolicSpec& s, int m, int r) {
  for (int j = 1; j <= s.k(); ++j)
    if (m == s.nj(j) && r > s.nj(j - 1) && r <= s.nj(j)) return r - s.nj(j - 1);
  return 1;
}

/// c~_{n_j, n_{j-1}+p} = c_{n_j, n_{j-1}+1} d_{n_j, n_{j-1}+2} ... d_{n_j, n_{j-1}+p}; otherwise c_{m,r}.
inline SparsePoly ctilde(const MirrorGraph& g, int m, int r) {
  const ParabolicSpec& s = g.spec();
  int p = ctilde_degree(s, m, r);
  if (p == 1) return arrow_poly(g, ArrowKind::c, m, r);
  int base = r - p;
  SparsePoly out = arrow_poly(g, ArrowKind::c, m, base + 1);
  for (int i = 2; i <= p; ++i) out *= arrow_poly(g, ArrowKind::d, m, base + i);
  return out;
}

/// d~_{m, r+1} for r = n_{j-1}, m = n_j - p (2 <= p <= l_j, 1 <= j <= k+1):
/// d_{n_j-1, n_{j-1}+1} c_{n_j-1, n_{j-1}} ... c_{n_j-p+1, n_{j-1}}; otherwise d_{m, r+1}.
inline SparsePoly dtilde(const MirrorGraph& g, int m, int rplus1) {
  const ParabolicSpec& s = g.spec();
  int r = rplus1 - 1;
  for (int j = 1; j <= s.k() + 1; ++j) {
    if (r != s.nj(j - 1)) continue;
    int p = s.nj(j) - m;
    if (p < 2 || p > s.block_length(j)) break;
    SparsePoly out = arrow_poly(g, ArrowKind::d, s.nj(j) - 1, r + 1);
    for (int i = 1; i <= p - 1; ++i) out *= arrow_poly(g, ArrowKind::c, s.nj(j) - i, r);
    return out;
  }
  return arrow_poly(g, ArrowKind::d, m, rplus1);
}

/// Memoized G^{(m,r)}_l from the column recursion
///   G^{(m,r)}_l = G^{(m,r-1)}_l + c~_{m,r} G^{(m-p,r-p)}_{l-p},  p = deg c~_{m,r},
/// with G_0 = 1, and G_l = 0 for l < 0, l > r, or (m,r) not a bullet.
class GPolynomials {
 public:
  explicit GPolynomials(const MirrorGraph& g) : g_(&g) {}

  const SparsePoly& operator()(int m, int r, int l) {
    auto key = std::make_tuple(m, r, l);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SparsePoly value;
    if (l == 0) {
      value = SparsePoly(1);
    } else if (l < 0 || l > r || !is_bullet_position(g_->spec(), m, r)) {
      value = SparsePoly();
    } else {
      int p = ctilde_degree(g_->spec(), m, r);
      value = (*this)(m, r - 1, l) + ctilde(*g_, m, r) * (*this)(m - p, r - p, l - p);
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

  template <Scalar S>
  S evaluate(int m, int r, int l, const ArrowAssignment<S>& rho) {
    return (*this)(m, r, l).evaluate(rho.values);
  }

  /// G^{(m,r)}_l - G^{(m+1,r)}_l - d_{m,r+1} G^{(m,r-1)}_{l-1}: lies in the critical ideal.
  SparsePoly second_recursion(int m, int r, int l) {
    return (*this)(m, r, l) - (*this)(m + 1, r, l) - arrow_poly(*g_, ArrowKind::d, m, r + 1) * (*this)(m, r - 1, l - 1);
  }

 private:
  const MirrorGraph* g_;
  std::map<std::tuple<int, int, int>, SparsePoly> memo_;
};

// ---------------------------------------------------------------------------
// Quantum cohomology generators

/// Ids for sigma^{(j)}_p (j = 1..k+1, p = 1..l_j) followed by q_1..q_k.
class GeneratorSet {
 public:
  explicit GeneratorSet(ParabolicSpec spec) : spec_(std::move(spec)) {
    for (int j = 1; j <= spec_.k() + 1; ++j)
      for (int p = 1; p <= spec_.block_length(j); ++p) {
        sigma_ids_[{j, p}] = static_cast<int>(entries_.size());
        entries_.push_back({false, j, p});
      }
    for (int j = 1; j <= spec_.k(); ++j) {
      q_ids_[j] = static_cast<int>(entries_.size());
      entries_.push_back({true, j, 0});
    }
  }

  const ParabolicSpec& spec() const { return spec_; }
  int size() const { return static_cast<int>(entries_.size()); }

  /// sigma^{(j)}_p with sigma_0 = 1 and sigma_p = 0 for p > l_j.
  SparsePoly sigma(int j, int p) const {
    if (p == 0) return SparsePoly(1);
    auto it = sigma_ids_.find({j, p});
    return it == sigma_ids_.end() ? SparsePoly() : SparsePoly::variable(it->second);
  }
  /// q_j; q_0 and q_{k+1} are absent.
  SparsePoly q(int j) const {
    auto it = q_ids_.find(j);
    return it == q_ids_.end() ? SparsePoly() : SparsePoly::variable(it->second);
  }

  bool is_q(int id) const { return entries_.at(static_cast<std::size_t>(id)).is_q; }
  int block(int id) const { return entries_.at(static_cast<std::size_t>(id)).j; }
  int index(int id) const { return entries_.at(static_cast<std::size_t>(id)).p; }

  /// deg sigma^{(j)}_p = p, deg q_j = n_{j+1} - n_{j-1}.
  int degree(int id) const {
    const auto& e = entries_.at(static_cast<std::size_t>(id));
    return e.is_q ? spec_.nj(e.j + 1) - spec_.nj(e.j - 1) : e.p;
  }

  std::string name(int id) const {
    const auto& e = entries_.at(static_cast<std::size_t>(id));
    if (e.is_q) return "q" + std::to_string(e.j);
    return "sigma(" + std::to_string(e.j) + "," + std::to_string(e.p) + ")";
  }

 private:
  struct Entry {
    bool is_q;
    int j;
    int p;
  };
  ParabolicSpec spec_;
  std::vector<Entry> entries_;
  std::map<std::pair<int, int>, int> sigma_ids_;
  std::map<int, int> q_ids_;
};

/// E^{(j)}_l = sum_{i=0}^{l} sigma^{(j)}_i E^{(j-1)}_{l-i} + (-1)^{n_j-n_{j-1}+1} q_{j-1} E^{(j-2)}_{l-n_j+n_{j-2}},
/// with E^{(-1)} = 0, E^{(j)}_0 = 1 for j >= 0, and E^{(j)}_l = 0 outside 0 <= l <= n_j.
class EPolynomials {
 public:
  explicit EPolynomials(const GeneratorSet& gens) : gens_(&gens) {}

  const SparsePoly& operator()(int j, int l) {
    const ParabolicSpec& s = gens_->spec();
    if (j < -1 || j > s.k() + 1) throw std::out_of_range("E polynomial: j out of range -1..k+1");
    auto key = std::make_pair(j, l);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SparsePoly value;
    if (j == -1 || l < 0 || l > s.nj(j)) {
      value = SparsePoly();
    } else if (l == 0) {
      value = SparsePoly(1);
    } else {
      for (int i = 0; i <= l; ++i) value += gens_->sigma(j, i) * (*this)(j - 1, l - i);
      if (j >= 2) {
        int sign = (s.nj(j) - s.nj(j - 1) + 1) % 2 == 0 ? 1 : -1;
        value += SparsePoly(sign) * gens_->q(j - 1) * (*this)(j - 2, l - s.nj(j) + s.nj(j - 2));
      }
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  const GeneratorSet* gens_;
  std::map<std::pair<int, int>, SparsePoly> memo_;
};

/// sigma~^{(j)}_p = c~_{n_j, n_{j-1}+p} + (-1)^p d~_{n_j-p, n_{j-1}+1}; 1 for p = 0, 0 outside 0..l_j.
inline SparsePoly sigma_tilde(const MirrorGraph& g, int j, int p) {
  const ParabolicSpec& s = g.spec();
  if (p == 0) return SparsePoly(1);
  if (p < 0 || j < 1 || j > s.k() + 1 || p > s.block_length(j)) return SparsePoly();
  SparsePoly d = dtilde(g, s.nj(j) - p, s.nj(j - 1) + 1);
  return ctilde(g, s.nj(j), s.nj(j - 1) + p) + (p % 2 == 0 ? d : -d);
}

/// kappa(q_j) = c~_{n_j,n_j} d~_{n_j,n_j+1}, which is the rim path product q~_j.
inline SparsePoly kappa_q(const MirrorGraph& g, int j) {
  int nj = g.spec().nj(j);
  return ctilde(g, nj, nj) * dtilde(g, nj, nj + 1);
}

/// Image of every generator id under kappa.
inline std::vector<SparsePoly> kappa_image(const MirrorGraph& g, const GeneratorSet& gens) {
  std::vector<SparsePoly> out;
  for (int id = 0; id < gens.size(); ++id)
    out.push_back(gens.is_q(id) ? kappa_q(g, gens.block(id)) : sigma_tilde(g, gens.block(id), gens.index(id)));
  return out;
}

inline SparsePoly apply_kappa(const SparsePoly& p, const std::vector<SparsePoly>& image) {
  return p.substitute([&](int id) { return image.at(static_cast<std::size_t>(id)); });
}

/// Generator values kappa(sigma), kappa(q) at a point rho.
template <Scalar S>
std::vector<S> kappa_values(const std::vector<SparsePoly>& image, const ArrowAssignment<S>& rho) {
  std::vector<S> out;
  for (const auto& p : image) out.push_back(p.evaluate(rho.values));
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic matrices

using SymbolicMatrix = std::vector<std::vector<SparsePoly>>;

inline SymbolicMatrix symbolic_identity(int size) {
  SymbolicMatrix m(static_cast<std::size_t>(size), std::vector<SparsePoly>(static_cast<std::size_t>(size)));
  for (int i = 0; i < size; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = SparsePoly(1);
  return m;
}

inline SymbolicMatrix symbolic_product(const SymbolicMatrix& a, const SymbolicMatrix& b) {
  std::size_t n = a.size();
  SymbolicMatrix out(n, std::vector<SparsePoly>(b.front().size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

template <Scalar S>
Matrix<S> evaluate_matrix(const SymbolicMatrix& m, const std::vector<S>& values) {
  Matrix<S> out(m.size(), m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j].evaluate(values);
  return out;
}

/// u from its column blocks: column n_j + i carries G^{(n_j+i-1, n_j)}_l in row n_j + i - l.
inline SymbolicMatrix u_matrix_symbolic(const MirrorGraph& g, GPolynomials& G) {
  const ParabolicSpec& s = g.spec();
  SymbolicMatrix u(static_cast<std::size_t>(s.dim()), std::vector<SparsePoly>(static_cast<std::size_t>(s.dim())));
  for (int j = 0; j <= s.k(); ++j)
    for (int i = 1; i <= s.block_length(j + 1); ++i) {
      int col = s.nj(j) + i;
      for (int l = 0; l < col; ++l)
        u[static_cast<std::size_t>(col - l - 1)][static_cast<std::size_t>(col - 1)] = G(s.nj(j) + i - 1, s.nj(j), l);
    }
  return u;
}

/// u = u_1 ... u_{n_k} with u_{n_{j-1}+p} = x_n(c_{n,r}) ... x_{n_j+1}(c_{n_j+1,r}) x_{[n_j-p+1, n_j]}(c~_{n_j,r}).
inline SymbolicMatrix u_matrix_factored(const MirrorGraph& g) {
  const ParabolicSpec& s = g.spec();
  SymbolicMatrix u = symbolic_identity(s.dim());
  auto factor = [&](int row, int col, const SparsePoly& t) {
    SymbolicMatrix x = symbolic_identity(s.dim());
    x[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = t;
    u = symbolic_product(u, x);
  };
  for (int j = 1; j <= s.k(); ++j)
    for (int p = 1; p <= s.block_length(j); ++p) {
      int r = s.nj(j - 1) + p;
      for (int m = s.n(); m > s.nj(j); --m) factor(m, m + 1, arrow_poly(g, ArrowKind::c, m, r));
      factor(s.nj(j) - p + 1, s.nj(j) + 1, ctilde(g, s.nj(j), r));
    }
  return u;
}

/// One generator per bullet: incoming arrows minus outgoing arrows.
inline std::vector<SparsePoly> critical_ideal_generators(const MirrorGraph& g) {
  std::vector<SparsePoly> out;
  for (std::size_t v : g.bullets()) {
    SparsePoly p;
    for (std::size_t a : g.incoming(v)) p += SparsePoly::variable(static_cast<int>(a));
    for (std::size_t a : g.outgoing(v)) p -= SparsePoly::variable(static_cast<int>(a));
    out.push_back(p);
  }
  return out;
}

/// e_l of a list of rationals.
inline Rational elementary_symmetric(const std::vector<Rational>& x, int l) {
  std::vector<Rational> e(static_cast<std::size_t>(l + 1), Rational(0));
  e[0] = 1;
  for (const auto& xi : x)
    for (int i = l; i >= 1; --i) e[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i - 1)] * xi;
  return l < 0 ? Rational(0) : e[static_cast<std::size_t>(l)];
}

struct ClassicalLimitRow {
  int l;
  Rational lhs;
  Rational rhs;
};

/// E^{(k+1)}_l at q = 0 with sigma^{(j)}_p = e_p(x_{n_{j-1}+1}, ..., x_{n_j}), against e_l(x).
inline std::vector<ClassicalLimitRow> classical_limit_check(const ParabolicSpec& s, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != s.dim()) throw std::invalid_argument("classical_limit_check: need n+1 values");
  GeneratorSet gens(s);
  EPolynomials E(gens);
  std::vector<Rational> values;
  for (int id = 0; id < gens.size(); ++id) {
    if (gens.is_q(id)) {
      values.emplace_back(0);
      continue;
    }
    int j = gens.block(id);
    std::vector<Rational> block(x.begin() + s.nj(j - 1), x.begin() + s.nj(j));
    values.push_back(elementary_symmetric(block, gens.index(id)));
  }
  std::vector<ClassicalLimitRow> out;
  for (int l = 1; l <= s.dim(); ++l) out.push_back({l, E(s.k() + 1, l).evaluate(values), elementary_symmetric(x, l)});
  return out;
}

}  // namespace mirror
