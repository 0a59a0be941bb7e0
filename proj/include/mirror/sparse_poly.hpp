#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Variables are small integer ids; the caller owns the mapping to names
// (arrow indices of a MirrorGraph, or generator ids of a GeneratorSet).
// Terms are kept in graded lexicographic order and zero coefficients are
// never stored, so structural equality is polynomial equality.

#include "mirror/scalar.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mirror {

/// Sorted (variable id, exponent) pairs with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int id, int exponent = 1) {
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(id, exponent);
    return m;
  }

  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  int degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }
  bool is_one() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() || j < b.factors_.size()) {
      if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i].first < b.factors_[j].first)) {
        out.factors_.push_back(a.factors_[i++]);
      } else if (i == a.factors_.size() || b.factors_[j].first < a.factors_[i].first) {
        out.factors_.push_back(b.factors_[j++]);
      } else {
        out.factors_.emplace_back(a.factors_[i].first, a.factors_[i].second + b.factors_[j].second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<int, int>> factors_;
};

/// Graded lexicographic: higher total degree first, then the larger exponent
/// of the lowest-numbered variable first.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    for (std::size_t i = 0; i < std::min(fa.size(), fb.size()); ++i) {
      if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
      if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return fa.size() < fb.size();
  }
};

class SparsePoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  SparsePoly() = default;
  SparsePoly(int c) : SparsePoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  SparsePoly(const Rational& c) {                 // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Monomial()] = c;
  }

  static SparsePoly variable(int id) {
    SparsePoly p;
    p.terms_[Monomial::variable(id)] = 1;
    return p;
  }
  static SparsePoly monomial(const Monomial& m, const Rational& c) {
    SparsePoly p;
    if (c != 0) p.terms_[m] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  /// Weighted homogeneity: every term has the same weight under `weight(var)`.
  bool is_homogeneous(const std::function<int(int)>& weight, int expected) const {
    for (const auto& [m, c] : terms_) {
      int w = 0;
      for (const auto& [var, e] : m.factors()) w += weight(var) * e;
      if (w != expected) return false;
    }
    return true;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) { return SparsePoly() - a; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  /// Evaluates with values[id] for each variable id.
  template <Scalar S>
  S evaluate(const std::vector<S>& values) const {
    S total(0);
    for (const auto& [m, c] : terms_) {
      S term = from_rational<S>(c);
      for (const auto& [var, e] : m.factors()) {
        if (var < 0 || static_cast<std::size_t>(var) >= values.size())
          throw std::out_of_range("SparsePoly::evaluate: no value for variable");
        for (int k = 0; k < e; ++k) term *= values[static_cast<std::size_t>(var)];
      }
      total += term;
    }
    return total;
  }

  /// Replaces every variable id by the polynomial images(id).
  SparsePoly substitute(const std::function<SparsePoly(int)>& images) const {
    SparsePoly out;
    std::map<int, SparsePoly> cache;
    for (const auto& [m, c] : terms_) {
      SparsePoly term(c);
      for (const auto& [var, e] : m.factors()) {
        auto it = cache.find(var);
        if (it == cache.end()) it = cache.emplace(var, images(var)).first;
        for (int k = 0; k < e; ++k) term *= it->second;
      }
      out += term;
    }
    return out;
  }

  std::string to_string(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational mag = c < 0 ? Rational(-c) : c;
      s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      first = false;
      bool show_coeff = mag != 1 || m.is_one();
      if (show_coeff) s += rational_to_string(mag);
      bool star = show_coeff;
      for (const auto& [var, e] : m.factors()) {
        if (star) s += "*";
        s += name(var);
        if (e > 1) s += "^" + std::to_string(e);
        star = true;
      }
    }
    return s;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

}  // namespace mirror
