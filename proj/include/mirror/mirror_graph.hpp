#pragma once

// The ladder quiver (V^P, A^P) of a partial flag variety SL(n+1)/P, arrow
// assignments on it, the box relations cutting out Z, the quantum parameters
// q~_j and the vertex-variable trivialization of the fibers of q~.

#include "mirror/flag_core.hpp"
#include "mirror/scalar.hpp"

#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mirror {

enum class VertexKind { bullet, star };

struct Vertex {
  int m = 0;
  int r = 0;
  VertexKind kind = VertexKind::bullet;
  int j = 0;  ///< star index (1..k+1); 0 for bullets
};

enum class ArrowKind { c, d };

/// c_{m,r}: (m,r) -> (m-1,r).  d_{m,r}: (m,r) -> (m,r-1).  Named after the tail.
struct Arrow {
  ArrowKind kind = ArrowKind::c;
  int m = 0;
  int r = 0;
  std::size_t tail = 0;
  std::size_t head = 0;

  std::string name() const {
    return std::string(kind == ArrowKind::c ? "c(" : "d(") + std::to_string(m) + "," + std::to_string(r) + ")";
  }
};

/// Arrows of a commuting square anchored at its lower-right vertex (m, r):
/// c_{m,r} d_{m-1,r} = d_{m,r} c_{m,r-1}.
struct BoxSquare {
  int m = 0;
  int r = 0;
  std::size_t c_right = 0;  ///< c_{m,r}
  std::size_t d_top = 0;    ///< d_{m-1,r}
  std::size_t d_bottom = 0; ///< d_{m,r}
  std::size_t c_left = 0;   ///< c_{m,r-1}
};

/// Bullet membership rule: n_1 <= m <= n and r <= n_j while m < n_{j+1}.
inline bool is_bullet_position(const ParabolicSpec& spec, int m, int r) {
  if (spec.k() == 0) return false;
  if (m < spec.nj(1) || m > spec.n() || r < 1) return false;
  for (int j = 1; j <= spec.k(); ++j)
    if (m < spec.nj(j + 1)) return r <= spec.nj(j);
  return false;
}

class MirrorGraph {
 public:
  explicit MirrorGraph(ParabolicSpec spec) : spec_(std::move(spec)) {
    for (int m = 0; m <= spec_.n(); ++m)
      for (int r = 1; r <= spec_.n() + 1; ++r) {
        int star = 0;
        for (int j = 1; j <= spec_.k() + 1; ++j)
          if (m == spec_.nj(j) - 1 && r == spec_.nj(j - 1) + 1) star = j;
        if (star) {
          add_vertex({m, r, VertexKind::star, star});
        } else if (is_bullet_position(spec_, m, r)) {
          add_vertex({m, r, VertexKind::bullet, 0});
        }
      }
    stars_.resize(static_cast<std::size_t>(spec_.k() + 1));
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (vertices_[v].kind == VertexKind::star) {
        stars_[static_cast<std::size_t>(vertices_[v].j - 1)] = v;
      } else {
        bullet_pos_[v] = bullets_.size();
        bullets_.push_back(v);
      }
    }
    incoming_.resize(vertices_.size());
    outgoing_.resize(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      const Vertex& x = vertices_[v];
      if (auto h = vertex_index(x.m - 1, x.r)) add_arrow({ArrowKind::c, x.m, x.r, v, *h});
      if (auto h = vertex_index(x.m, x.r - 1)) add_arrow({ArrowKind::d, x.m, x.r, v, *h});
    }
    for (const Arrow& a : arrows_) {
      if (a.kind != ArrowKind::c) continue;
      auto d_top = arrow_index(ArrowKind::d, a.m - 1, a.r);
      auto d_bottom = arrow_index(ArrowKind::d, a.m, a.r);
      auto c_left = arrow_index(ArrowKind::c, a.m, a.r - 1);
      if (d_top && d_bottom && c_left) squares_.push_back({a.m, a.r, *arrow_index(ArrowKind::c, a.m, a.r), *d_top, *d_bottom, *c_left});
    }
  }

  const ParabolicSpec& spec() const { return spec_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<BoxSquare>& squares() const { return squares_; }
  std::size_t num_arrows() const { return arrows_.size(); }
  std::size_t num_bullets() const { return bullets_.size(); }

  /// Vertex indices of the bullets, in row-major order.
  const std::vector<std::size_t>& bullets() const { return bullets_; }
  /// Vertex index of star_j, j = 1..k+1.
  std::size_t star(int j) const { return stars_.at(static_cast<std::size_t>(j - 1)); }
  /// Position of a bullet vertex inside bullets(), if it is one.
  std::optional<std::size_t> bullet_position(std::size_t v) const {
    auto it = bullet_pos_.find(v);
    if (it == bullet_pos_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> vertex_index(int m, int r) const {
    auto it = vertex_lookup_.find({m, r});
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> arrow_index(ArrowKind kind, int m, int r) const {
    auto it = arrow_lookup_.find({kind, {m, r}});
    if (it == arrow_lookup_.end()) return std::nullopt;
    return it->second;
  }

  /// Looks up "c(m,r)" / "d(m,r)".
  std::optional<std::size_t> arrow_index(const std::string& name) const {
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (arrows_[a].name() == name) return a;
    return std::nullopt;
  }

  const std::vector<std::size_t>& incoming(std::size_t v) const { return incoming_.at(v); }
  const std::vector<std::size_t>& outgoing(std::size_t v) const { return outgoing_.at(v); }

 private:
  void add_vertex(Vertex v) {
    vertex_lookup_[{v.m, v.r}] = vertices_.size();
    vertices_.push_back(v);
  }

  void add_arrow(Arrow a) {
    std::size_t idx = arrows_.size();
    arrow_lookup_[{a.kind, {a.m, a.r}}] = idx;
    outgoing_[a.tail].push_back(idx);
    incoming_[a.head].push_back(idx);
    arrows_.push_back(a);
  }

  ParabolicSpec spec_;
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<BoxSquare> squares_;
  std::vector<std::size_t> bullets_;
  std::vector<std::size_t> stars_;
  std::map<std::size_t, std::size_t> bullet_pos_;
  std::map<std::pair<int, int>, std::size_t> vertex_lookup_;
  std::map<std::pair<ArrowKind, std::pair<int, int>>, std::size_t> arrow_lookup_;
  std::vector<std::vector<std::size_t>> incoming_;
  std::vector<std::vector<std::size_t>> outgoing_;
};

/// A point rho of C^A: one value per arrow, in graph arrow order.
template <Scalar S>
struct ArrowAssignment {
  std::vector<S> values;

  const S& operator[](std::size_t a) const { return values[a]; }
  S& operator[](std::size_t a) { return values[a]; }

  const S& at(const MirrorGraph& g, const std::string& name) const {
    auto a = g.arrow_index(name);
    if (!a) throw std::out_of_range("no arrow named " + name);
    return values[*a];
  }

  template <Scalar T, class F>
  ArrowAssignment<T> map(F&& f) const {
    ArrowAssignment<T> out;
    out.values.reserve(values.size());
    for (const S& x : values) out.values.push_back(f(x));
    return out;
  }
};

template <Scalar S>
ArrowAssignment<S> constant_assignment(const MirrorGraph& g, const S& value) {
  return {std::vector<S>(g.num_arrows(), value)};
}

/// Value of an arrow that may not exist in A^P; missing arrows read as 0.
template <Scalar S>
S arrow_value(const MirrorGraph& g, const ArrowAssignment<S>& rho, ArrowKind kind, int m, int r) {
  auto a = g.arrow_index(kind, m, r);
  return a ? rho[*a] : S(0);
}

template <Scalar S>
std::vector<S> box_residuals(const MirrorGraph& g, const ArrowAssignment<S>& rho) {
  std::vector<S> out;
  for (const BoxSquare& b : g.squares()) out.push_back(rho[b.c_right] * rho[b.d_top] - rho[b.d_bottom] * rho[b.c_left]);
  return out;
}

/// Exact: every box residual vanishes. Numeric: |residual| <= tol * max(1, max|rho|)^2.
template <Scalar S>
bool lies_in_z(const MirrorGraph& g, const ArrowAssignment<S>& rho, double tol = kDefaultZeroTolerance) {
  auto res = box_residuals(g, rho);
  if constexpr (is_exact_v<S>) {
    for (const S& x : res)
      if (!(x == S(0))) return false;
    return true;
  } else {
    double scale = std::max(1.0, max_magnitude(rho.values));
    return max_magnitude(res) <= tol * scale * scale;
  }
}

/// Rim path from star_{j+1} to star_j: one d into column n_j, up that column
/// to row n_j, left along row n_j to column n_{j-1}+1, then up into star_j.
inline std::vector<std::size_t> qtilde_path(const MirrorGraph& g, int j) {
  const ParabolicSpec& s = g.spec();
  if (j < 1 || j > s.k()) throw std::out_of_range("qtilde_path: j out of range 1..k");
  std::vector<std::size_t> path;
  auto step = [&](ArrowKind kind, int m, int r) {
    auto a = g.arrow_index(kind, m, r);
    if (!a) throw std::logic_error("qtilde_path: rim arrow missing from graph");
    path.push_back(*a);
  };
  int row = s.nj(j + 1) - 1;
  int col = s.nj(j) + 1;
  step(ArrowKind::d, row, col--);
  while (row > s.nj(j)) step(ArrowKind::c, row--, col);
  while (col > s.nj(j - 1) + 1) step(ArrowKind::d, row, col--);
  step(ArrowKind::c, row, col);
  return path;
}

template <Scalar S>
S path_product(const ArrowAssignment<S>& rho, const std::vector<std::size_t>& path) {
  S p(1);
  for (std::size_t a : path) p *= rho[a];
  return p;
}

template <Scalar S>
std::vector<S> qtilde_values(const MirrorGraph& g, const ArrowAssignment<S>& rho) {
  std::vector<S> out;
  for (int j = 1; j <= g.spec().k(); ++j) out.push_back(path_product(rho, qtilde_path(g, j)));
  return out;
}

/// t_{star_j} = Q~_j ... Q~_k, t_{star_{k+1}} = 1.
template <Scalar S>
std::vector<S> star_values(const std::vector<S>& qtilde) {
  std::vector<S> t(qtilde.size() + 1, S(1));
  for (std::size_t j = qtilde.size(); j-- > 0;) t[j] = qtilde[j] * t[j + 1];
  return t;
}

/// Values on every vertex from bullet values (in bullets() order) and Q~.
template <Scalar S>
std::vector<S> vertex_values(const MirrorGraph& g, const std::vector<S>& qtilde, const std::vector<S>& t_bullet) {
  if (static_cast<int>(qtilde.size()) != g.spec().k()) throw std::invalid_argument("vertex_values: need k values of Q~");
  if (t_bullet.size() != g.num_bullets()) throw std::invalid_argument("vertex_values: need one value per bullet");
  std::vector<S> t(g.vertices().size(), S(0));
  auto st = star_values(qtilde);
  for (int j = 1; j <= g.spec().k() + 1; ++j) t[g.star(j)] = st[static_cast<std::size_t>(j - 1)];
  for (std::size_t b = 0; b < g.num_bullets(); ++b) t[g.bullets()[b]] = t_bullet[b];
  return t;
}

/// rho_a = t_{h(a)} / t_{t(a)}: a point of Z with q~(rho) = Q~ and no zero arrow.
template <Scalar S>
ArrowAssignment<S> trivialize_fiber(const MirrorGraph& g, const std::vector<S>& qtilde, const std::vector<S>& t_bullet) {
  for (const S& q : qtilde)
    if (q == S(0)) throw std::invalid_argument("trivialize_fiber: Q~ components must be nonzero");
  for (const S& t : t_bullet)
    if (t == S(0)) throw std::invalid_argument("trivialize_fiber: vertex values must be nonzero");
  auto t = vertex_values(g, qtilde, t_bullet);
  ArrowAssignment<S> rho;
  for (const Arrow& a : g.arrows()) rho.values.push_back(t[a.head] / t[a.tail]);
  return rho;
}

/// Inverse of trivialize_fiber on Z with all arrows nonzero: fix the stars from
/// q~(rho) and propagate t_tail = t_head / rho_a through the graph. Returns
/// the bullet values.
template <Scalar S>
std::vector<S> recover_vertex_values(const MirrorGraph& g, const ArrowAssignment<S>& rho) {
  auto st = star_values(qtilde_values(g, rho));
  std::vector<std::optional<S>> t(g.vertices().size());
  std::queue<std::size_t> todo;
  for (int j = 1; j <= g.spec().k() + 1; ++j) {
    t[g.star(j)] = st[static_cast<std::size_t>(j - 1)];
    todo.push(g.star(j));
  }
  while (!todo.empty()) {
    std::size_t v = todo.front();
    todo.pop();
    for (std::size_t a : g.incoming(v)) {
      std::size_t u = g.arrows()[a].tail;
      if (t[u] || rho[a] == S(0)) continue;
      t[u] = *t[v] / rho[a];
      todo.push(u);
    }
    for (std::size_t a : g.outgoing(v)) {
      std::size_t u = g.arrows()[a].head;
      if (t[u]) continue;
      t[u] = *t[v] * rho[a];
      todo.push(u);
    }
  }
  std::vector<S> out;
  for (std::size_t v : g.bullets()) {
    if (!t[v]) throw std::domain_error("recover_vertex_values: vertex unreachable through nonzero arrows");
    out.push_back(*t[v]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Boundary strata Z_(P,P')

/// Coordinates of V^{P'}_bullet for I^{P'} inside the same SL(n+1).
inline std::vector<std::pair<int, int>> bullet_positions(const ParabolicSpec& spec) {
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m <= spec.n(); ++m)
    for (int r = 1; r <= spec.n() + 1; ++r)
      if (is_bullet_position(spec, m, r)) out.emplace_back(m, r);
  return out;
}

/// Arrows that vanish on Z_(P,P'): those touching a vertex of V^{P'}_bullet.
inline std::vector<bool> boundary_zero_pattern(const MirrorGraph& g, const ParabolicSpec& pprime) {
  std::vector<bool> zero(g.num_arrows(), false);
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const Arrow& arr = g.arrows()[a];
    const Vertex& h = g.vertices()[arr.head];
    const Vertex& t = g.vertices()[arr.tail];
    zero[a] = is_bullet_position(pprime, h.m, h.r) || is_bullet_position(pprime, t.m, t.r);
  }
  return zero;
}

/// All subsets of I^P, smallest first.
inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& set) {
  std::vector<std::vector<int>> out;
  std::size_t count = std::size_t{1} << set.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < set.size(); ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(set[i]);
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

/// I^{P'} with rho in Z_(P,P'), or nullopt when the zero pattern of rho matches
/// no stratum. Numeric zeros: |rho_a| <= tol * max|rho|.
template <Scalar S>
std::optional<std::vector<int>> classify_boundary(const MirrorGraph& g, const ArrowAssignment<S>& rho,
                                                  double tol = kDefaultZeroTolerance) {
  double scale = max_magnitude(rho.values);
  std::vector<bool> zero(g.num_arrows());
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    if constexpr (is_exact_v<S>) {
      zero[a] = rho[a] == S(0);
    } else {
      zero[a] = magnitude(rho[a]) <= tol * scale;
    }
  }
  for (const auto& ipp : subsets_of(g.spec().ip()))
    if (boundary_zero_pattern(g, ParabolicSpec(g.spec().n(), ipp)) == zero) return ipp;
  return std::nullopt;
}

/// One connected piece of the graph left after deleting V^{P'}_bullet: the
/// mirror graph of a parabolic inside SL(l'), embedded by (m,r) -> (m+s, r+s).
struct SubgraphComponent {
  ParabolicSpec sub_spec;
  int offset = 0;
  std::vector<int> qtilde_index;      ///< sub j' -> original j (1-based)
  std::vector<std::size_t> arrow_map; ///< sub arrow index -> original arrow index
  std::vector<std::size_t> vertex_map;
};

inline std::vector<SubgraphComponent> subgraph_decomposition(const MirrorGraph& g, const std::vector<int>& ipprime) {
  const ParabolicSpec& spec = g.spec();
  ParabolicSpec pprime(spec.n(), ipprime);
  if (!pprime.is_subset_of(spec)) throw std::invalid_argument("subgraph_decomposition: I^{P'} must be a subset of I^P");
  // Cut points j_0 = 0 < j_1 < ... < j_{k'} < j_{k'+1} = k+1, as indices into n_0..n_{k+1}.
  std::vector<int> cuts{0};
  for (int i : pprime.ip()) cuts.push_back(spec.position_of(i));
  cuts.push_back(spec.k() + 1);

  std::vector<SubgraphComponent> out;
  for (std::size_t c = 1; c < cuts.size(); ++c) {
    int lo = cuts[c - 1];
    int hi = cuts[c];
    if (hi - lo < 2) continue;  // no index of I^P strictly inside: no bullets
    int s = spec.nj(lo);
    int length = spec.nj(hi) - s;
    std::vector<int> sub_ip;
    for (int j = lo + 1; j < hi; ++j) sub_ip.push_back(spec.nj(j) - s);
    SubgraphComponent comp{ParabolicSpec(length - 1, sub_ip), s, {}, {}, {}};
    for (int j = lo + 1; j < hi; ++j) comp.qtilde_index.push_back(j);
    MirrorGraph sub(comp.sub_spec);
    for (const Vertex& v : sub.vertices()) {
      auto idx = g.vertex_index(v.m + s, v.r + s);
      if (!idx) throw std::logic_error("subgraph_decomposition: vertex does not embed");
      comp.vertex_map.push_back(*idx);
    }
    for (const Arrow& a : sub.arrows()) {
      auto idx = g.arrow_index(a.kind, a.m + s, a.r + s);
      if (!idx) throw std::logic_error("subgraph_decomposition: arrow does not embed");
      comp.arrow_map.push_back(*idx);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace mirror
