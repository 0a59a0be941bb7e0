#pragma once

// Linear algebra for SL(n+1): the pinning (root subgroups x_i, y_i and the
// Weyl representatives sdot_i), reduced words, parabolic data, wedge-power
// minors, the Peterson condition and total nonnegativity.
//
// Index conventions: ranks and root indices are 1-based exactly as in the
// mathematics (i in {1,...,n}); Matrix storage is 0-based, so the (i, i+1)
// entry of x_i(t) lives at matrix position (i-1, i).

#include "mirror/matrix.hpp"
#include "mirror/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirror {

/// A parabolic P of SL(n+1) given by I^P = {n_1 < ... < n_k}. k = 0 is P = G.
class ParabolicSpec {
 public:
  ParabolicSpec(int n, std::vector<int> ip) : n_(n), ip_(std::move(ip)) {
    if (n_ < 1) throw std::invalid_argument("ParabolicSpec: rank must be >= 1");
    std::sort(ip_.begin(), ip_.end());
    if (std::adjacent_find(ip_.begin(), ip_.end()) != ip_.end())
      throw std::invalid_argument("ParabolicSpec: repeated index in I^P");
    for (int i : ip_)
      if (i < 1 || i > n_) throw std::invalid_argument("ParabolicSpec: I^P index out of range 1..n");
  }

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  int k() const { return static_cast<int>(ip_.size()); }
  const std::vector<int>& ip() const { return ip_; }

  /// n_j for j = 0..k+1 with n_0 = 0 and n_{k+1} = n+1.
  int nj(int j) const {
    if (j < 0 || j > k() + 1) throw std::out_of_range("ParabolicSpec::nj");
    if (j == 0) return 0;
    if (j == k() + 1) return n_ + 1;
    return ip_[static_cast<std::size_t>(j - 1)];
  }

  /// l_j = n_j - n_{j-1} for j = 1..k+1.
  int block_length(int j) const { return nj(j) - nj(j - 1); }

  bool in_ip(int i) const { return std::binary_search(ip_.begin(), ip_.end(), i); }

  /// I_P: the simple roots of the Levi factor.
  std::vector<int> levi_indices() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
      if (!in_ip(i)) out.push_back(i);
    return out;
  }

  /// Index j with n_j == i, or 0 if i is not in I^P.
  int position_of(int i) const {
    auto it = std::lower_bound(ip_.begin(), ip_.end(), i);
    if (it == ip_.end() || *it != i) return 0;
    return static_cast<int>(it - ip_.begin()) + 1;
  }

  bool is_subset_of(const ParabolicSpec& other) const {
    return n_ == other.n_ && std::includes(other.ip_.begin(), other.ip_.end(), ip_.begin(), ip_.end());
  }

  std::string label() const {
    std::ostringstream os;
    os << "SL" << n_ + 1 << "/P{";
    for (std::size_t i = 0; i < ip_.size(); ++i) os << (i ? "," : "") << ip_[i];
    os << "}";
    return os.str();
  }

  friend bool operator==(const ParabolicSpec&, const ParabolicSpec&) = default;

 private:
  int n_;
  std::vector<int> ip_;
};

// ---------------------------------------------------------------------------
// Weyl group words

/// Letters i_1 ... i_m, each in {1..n}, read as s_{i_1} s_{i_2} ... s_{i_m}.
using WeylWord = std::vector<int>;

/// One-line notation, 0-based: perm[a] = w(a). Composition acts right to left.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n + 1));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline void check_letter(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("simple root index out of range 1..n");
}

/// Permutation of s_{i_1} ... s_{i_m}.
inline Permutation word_permutation(int n, const WeylWord& word) {
  Permutation p = identity_permutation(n);
  // Right multiplication by s_i swaps the values at positions i-1 and i.
  for (int i : word) {
    check_letter(n, i);
    std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
  }
  return p;
}

inline Permutation inverse_permutation(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) inv[static_cast<std::size_t>(p[a])] = static_cast<int>(a);
  return inv;
}

inline int permutation_length(const Permutation& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return inv;
}

inline bool is_reduced(int n, const WeylWord& word) {
  return permutation_length(word_permutation(n, word)) == static_cast<int>(word.size());
}

/// The block reduced word of the longest element of the parabolic subgroup
/// generated by `levi`: for each maximal interval [a+1, b] it contributes
/// (s_b ... s_{a+1})(s_b ... s_{a+2}) ... (s_b).
inline WeylWord longest_word(const std::vector<int>& levi) {
  WeylWord word;
  std::size_t i = 0;
  while (i < levi.size()) {
    std::size_t j = i;
    while (j + 1 < levi.size() && levi[j + 1] == levi[j] + 1) ++j;
    int lo = levi[i];
    int hi = levi[j];
    for (int start = lo; start <= hi; ++start)
      for (int letter = hi; letter >= start; --letter) word.push_back(letter);
    i = j + 1;
  }
  return word;
}

inline WeylWord longest_word(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return longest_word(all);
}

/// w^{[r]}_l = s_{r-l+1} s_{r-l+2} ... s_r, for 1 <= l <= r.
inline WeylWord interval_word(int r, int l) {
  if (l < 1 || l > r) throw std::out_of_range("interval_word: need 1 <= l <= r");
  WeylWord w;
  for (int i = r - l + 1; i <= r; ++i) w.push_back(i);
  return w;
}

/// Positions (0-based) of the positive, i.e. rightmost reduced, subexpression
/// for `target` inside the reduced word `word`.
inline std::vector<std::size_t> positive_subexpression(int n, const WeylWord& word, const Permutation& target) {
  Permutation x = target;
  std::vector<std::size_t> positions;
  for (std::size_t pos = word.size(); pos-- > 0;) {
    int i = word[pos];
    auto a = static_cast<std::size_t>(i - 1);
    if (x[a] > x[a + 1]) {  // right descent at i
      std::swap(x[a], x[a + 1]);
      positions.push_back(pos);
    }
  }
  if (x != identity_permutation(n))
    throw std::invalid_argument("positive_subexpression: target is not below the word in Bruhat order");
  std::reverse(positions.begin(), positions.end());
  return positions;
}

struct ParabolicWords {
  WeylWord w_p;                             ///< standard reduced word for w_P
  WeylWord w_pprime;                        ///< standard reduced word for w_{P'}
  std::vector<std::size_t> pattern_positions;  ///< positive subexpression of w_P in w_pprime (0-based)
};

/// Requires I^{P'} subset of I^P (equivalently I_{P'} contains I_P).
inline ParabolicWords parabolic_words(const ParabolicSpec& spec, const ParabolicSpec& pprime) {
  if (!pprime.is_subset_of(spec)) throw std::invalid_argument("parabolic_words: I^{P'} must be a subset of I^P");
  ParabolicWords out;
  out.w_p = longest_word(spec.levi_indices());
  out.w_pprime = longest_word(pprime.levi_indices());
  out.pattern_positions = positive_subexpression(spec.n(), out.w_pprime, word_permutation(spec.n(), out.w_p));
  return out;
}

// ---------------------------------------------------------------------------
// Root subgroups and Weyl representatives

enum class GeneratorKind { x, y, sdot, x_interval };

template <Scalar S>
Matrix<S> x_matrix(int n, int i, const S& t) {
  check_letter(n, i);
  auto m = Matrix<S>::identity(static_cast<std::size_t>(n + 1));
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = t;
  return m;
}

template <Scalar S>
Matrix<S> y_matrix(int n, int i, const S& t) {
  check_letter(n, i);
  auto m = Matrix<S>::identity(static_cast<std::size_t>(n + 1));
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = t;
  return m;
}

/// sdot_i = y_i(-1) x_i(1) y_i(-1): the block [[0,1],[-1,0]] at rows/cols (i, i+1).
template <Scalar S>
Matrix<S> sdot_matrix(int n, int i) {
  check_letter(n, i);
  auto m = Matrix<S>::identity(static_cast<std::size_t>(n + 1));
  auto a = static_cast<std::size_t>(i - 1);
  m(a, a) = S(0);
  m(a + 1, a + 1) = S(0);
  m(a, a + 1) = S(1);
  m(a + 1, a) = S(-1);
  return m;
}

template <Scalar S>
Matrix<S> sdot_inverse_matrix(int n, int i) {
  auto m = sdot_matrix<S>(n, i);
  auto a = static_cast<std::size_t>(i - 1);
  m(a, a + 1) = S(-1);
  m(a + 1, a) = S(1);
  return m;
}

/// Unipotent upper triangular with (i, i'+1) entry t; root alpha_i + ... + alpha_{i'}.
template <Scalar S>
Matrix<S> x_interval_matrix(int n, int i, int iprime, const S& t) {
  check_letter(n, i);
  check_letter(n, iprime);
  if (iprime < i) throw std::out_of_range("x_interval_matrix: need i <= i'");
  auto m = Matrix<S>::identity(static_cast<std::size_t>(n + 1));
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(iprime)) = t;
  return m;
}

template <Scalar S>
Matrix<S> generator_matrix(int n, GeneratorKind kind, int i, const S& t, std::optional<int> iprime = std::nullopt) {
  switch (kind) {
    case GeneratorKind::x: return x_matrix<S>(n, i, t);
    case GeneratorKind::y: return y_matrix<S>(n, i, t);
    case GeneratorKind::sdot: return sdot_matrix<S>(n, i);
    case GeneratorKind::x_interval:
      if (!iprime || *iprime <= i) throw std::out_of_range("generator_matrix: x_interval needs i < i'");
      return x_interval_matrix<S>(n, i, *iprime, t);
  }
  throw std::logic_error("generator_matrix: unknown kind");
}

/// sdot_{i_1} ... sdot_{i_m}. Reducedness is the caller's concern.
template <Scalar S>
Matrix<S> word_matrix(int n, const WeylWord& word) {
  auto m = Matrix<S>::identity(static_cast<std::size_t>(n + 1));
  for (int i : word) m = m * sdot_matrix<S>(n, i);
  return m;
}

template <Scalar S>
Matrix<S> word_matrix_inverse(int n, const WeylWord& word) {
  auto m = Matrix<S>::identity(static_cast<std::size_t>(n + 1));
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = m * sdot_inverse_matrix<S>(n, *it);
  return m;
}

/// f = f_1 + ... + f_n: ones on the subdiagonal.
template <Scalar S>
Matrix<S> principal_nilpotent(int n) {
  if (n < 1) throw std::invalid_argument("principal_nilpotent: n must be >= 1");
  Matrix<S> f(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) f(i, i - 1) = S(1);
  return f;
}

// ---------------------------------------------------------------------------
// Peterson variety

/// Entries of g^{-1} f g strictly above the superdiagonal, row-major.
/// gB^- lies on the Peterson variety iff they all vanish.
template <Scalar S>
std::vector<S> peterson_residual(const Matrix<S>& g) {
  int n = static_cast<int>(g.rows()) - 1;
  Matrix<S> x = g.inverse() * principal_nilpotent<S>(n) * g;
  std::vector<S> out;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = i + 2; j < x.cols(); ++j) out.push_back(x(i, j));
  return out;
}

template <Scalar S>
double max_magnitude(const std::vector<S>& v) {
  double m = 0.0;
  for (const S& x : v) m = std::max(m, magnitude(x));
  return m;
}

/// Exact: every residual entry is zero. Numeric: max entry <= tol * max(1, max|g^{-1} f g|).
template <Scalar S>
bool on_peterson_variety(const Matrix<S>& g, double tol = kDefaultZeroTolerance) {
  auto res = peterson_residual(g);
  if constexpr (is_exact_v<S>) {
    return std::all_of(res.begin(), res.end(), [](const S& x) { return x == S(0); });
  } else {
    int n = static_cast<int>(g.rows()) - 1;
    double scale = std::max(1.0, (g.inverse() * principal_nilpotent<S>(n) * g).max_abs());
    return max_magnitude(res) <= tol * scale;
  }
}

inline std::vector<std::size_t> index_range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v;
  for (std::size_t i = from; i < to; ++i) v.push_back(i);
  return v;
}

/// True when w is a minimal-length coset representative for the maximal
/// parabolic of omega_r, i.e. l(w s_i) > l(w) for every i != r.
inline bool is_min_coset_rep(int n, const WeylWord& w, int r) {
  Permutation p = word_permutation(n, w);
  for (int i = 1; i <= n; ++i) {
    if (i == r) continue;
    if (p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

/// M_{w omega_r}(gB^-) = <g v, w v> / <g v, v> with v = v_{r+1} ^ ... ^ v_{n+1}.
/// Both pairings are (n+1-r)-minors of g on columns r+1..n+1; the numerator
/// rows are w.{r+1..n+1}, signed by the corresponding minor of wdot.
template <Scalar S>
S m_function(const Matrix<S>& g, const WeylWord& w, int r, double tol = kDefaultZeroTolerance) {
  int n = static_cast<int>(g.rows()) - 1;
  if (r < 1 || r > n) throw std::out_of_range("m_function: r out of range 1..n");
  if (!is_min_coset_rep(n, w, r)) throw std::invalid_argument("m_function: w is not in W^{P_{omega_r}}");
  auto cols = index_range(static_cast<std::size_t>(r), static_cast<std::size_t>(n + 1));
  Matrix<S> wdot = word_matrix<S>(n, w);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < wdot.rows(); ++i)
    for (std::size_t c : cols)
      if (!(wdot(i, c) == S(0))) {
        rows.push_back(i);
        break;
      }
  S sign = wdot.minor(rows, cols);
  S den = g.minor(cols, cols);
  double scale = std::max(1.0, g.max_abs());
  if (is_zero(den, tol * scale)) throw std::domain_error("m_function: pole of M at this flag point");
  return sign * g.minor(rows, cols) / den;
}

// ---------------------------------------------------------------------------
// Total nonnegativity

namespace detail {
template <class F>
void for_each_subset(std::size_t n, std::size_t size, F&& f) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  if (size > n) return;
  while (true) {
    f(std::as_const(idx));
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < size; ++q) idx[q] = idx[q - 1] + 1;
  }
}
}  // namespace detail

inline constexpr std::size_t kMaxTnnSize = 8;

/// Smallest minor of any size; exhaustive, limited to matrices up to 8x8.
inline double min_minor(const Matrix<double>& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("min_minor: not square");
  if (g.rows() > kMaxTnnSize) throw std::length_error("min_minor: exhaustive minor test limited to 8x8");
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t size = 1; size <= g.rows(); ++size)
    detail::for_each_subset(g.rows(), size, [&](const std::vector<std::size_t>& rows) {
      detail::for_each_subset(g.cols(), size, [&](const std::vector<std::size_t>& cols) {
        lo = std::min(lo, g.minor(rows, cols));
      });
    });
  return lo;
}

inline bool is_totally_nonnegative(const Matrix<double>& g, double eps = 1e-12) { return min_minor(g) >= -eps; }

// ---------------------------------------------------------------------------
// Flag points gB^-

/// Plucker vector of the span of columns first_col..n (0-based), over sorted row subsets.
template <Scalar S>
std::vector<S> column_plucker(const Matrix<S>& g, std::size_t first_col) {
  auto cols = index_range(first_col, g.cols());
  std::vector<S> out;
  detail::for_each_subset(g.rows(), cols.size(), [&](const std::vector<std::size_t>& rows) {
    out.push_back(g.minor(rows, cols));
  });
  return out;
}

template <Scalar S>
bool proportional(const std::vector<S>& a, const std::vector<S>& b, double tol) {
  if constexpr (is_exact_v<S>) {
    std::size_t piv = 0;
    while (piv < a.size() && a[piv] == S(0)) ++piv;
    if (piv == a.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] * b[piv] == a[piv] * b[i])) return false;
    return !(b[piv] == S(0));
  } else {
    std::size_t piv = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (magnitude(a[i]) > magnitude(a[piv])) piv = i;
    double amax = magnitude(a[piv]);
    double bmax = max_magnitude(b);
    if (amax == 0.0 || bmax == 0.0) return false;
    S scale = b[piv] / a[piv];
    for (std::size_t i = 0; i < a.size(); ++i)
      if (magnitude(b[i] - scale * a[i]) > tol * bmax) return false;
    return true;
  }
}

/// g1 B^- == g2 B^-: every span of trailing columns agrees (chart-free).
template <Scalar S>
bool same_flag(const Matrix<S>& g1, const Matrix<S>& g2, double tol = kDefaultZeroTolerance) {
  if (g1.rows() != g2.rows()) return false;
  for (std::size_t first = 1; first < g1.cols(); ++first)
    if (!proportional(column_plucker(g1, first), column_plucker(g2, first), tol)) return false;
  return true;
}

/// Canonical representative of gB^- for exact scalars: each column, from the
/// last to the first, is reduced against the pivots of the later columns and
/// normalized so its topmost remaining nonzero entry is 1.
template <Scalar S>
  requires is_exact_v<S>
Matrix<S> canonical_flag(Matrix<S> g) {
  std::size_t size = g.rows();
  std::vector<std::size_t> pivot(size, size);
  for (std::size_t col = size; col-- > 0;) {
    for (std::size_t later = col + 1; later < size; ++later) {
      S factor = g(pivot[later], col);
      if (factor == S(0)) continue;
      for (std::size_t i = 0; i < size; ++i) g(i, col) -= factor * g(i, later);
    }
    std::size_t p = 0;
    while (p < size && g(p, col) == S(0)) ++p;
    if (p == size) throw std::domain_error("canonical_flag: singular matrix");
    S inv = S(1) / g(p, col);
    for (std::size_t i = 0; i < size; ++i) g(i, col) *= inv;
    pivot[col] = p;
  }
  return g;
}

}  // namespace mirror
