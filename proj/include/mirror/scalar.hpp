#pragma once

// Scalar types used throughout the library.
//
// Every algorithm is generic over the scalar: exact rationals (Rational),
// Gaussian rationals (GaussianRational), double and std::complex<double>.
// ScalarTraits<S> supplies the handful of operations that differ between
// exact and floating-point fields.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <type_traits>

namespace mirror {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Rational numbers with i adjoined; exact arithmetic in Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational den = o.norm();
    if (den == 0) throw std::domain_error("GaussianRational: division by zero");
    GaussianRational num = *this * o.conj();
    re_ = num.re_ / den;
    im_ = num.im_ / den;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline std::string rational_to_string(const Rational& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1) {
    s += "/";
    s += boost::multiprecision::denominator(r).str();
  }
  return s;
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
  boost::multiprecision::cpp_int num(text.substr(0, slash));
  boost::multiprecision::cpp_int den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  return Rational(num, den);
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr bool complex = false;
  static Rational from_rational(const Rational& r) { return r; }
  static double magnitude(const Rational& x) { return std::abs(x.convert_to<double>()); }
  static std::string to_string(const Rational& x) { return rational_to_string(x); }
};

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool exact = true;
  static constexpr bool complex = true;
  static GaussianRational from_rational(const Rational& r) { return GaussianRational(r); }
  static double magnitude(const GaussianRational& x) {
    return std::hypot(x.re().convert_to<double>(), x.im().convert_to<double>());
  }
  static std::string to_string(const GaussianRational& x) {
    return rational_to_string(x.re()) + (x.im() < 0 ? "-" : "+") +
           rational_to_string(x.im() < 0 ? Rational(-x.im()) : x.im()) + "i";
  }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr bool complex = false;
  static double from_rational(const Rational& r) { return r.convert_to<double>(); }
  static double magnitude(double x) { return std::abs(x); }
  static std::string to_string(double x) { return format_double(x); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr bool complex = true;
  static Complex from_rational(const Rational& r) { return {r.convert_to<double>(), 0.0}; }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static std::string to_string(const Complex& x) {
    return format_double(x.real()) + (x.imag() < 0 ? "-" : "+") + format_double(std::abs(x.imag())) + "i";
  }
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <Scalar S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

/// Exact scalars compare against zero exactly; numeric scalars use |x| <= tol.
template <Scalar S>
bool is_zero(const S& x, double tol) {
  if constexpr (is_exact_v<S>) {
    return x == S(0);
  } else {
    return ScalarTraits<S>::magnitude(x) <= tol;
  }
}

template <Scalar S>
double magnitude(const S& x) {
  return ScalarTraits<S>::magnitude(x);
}

template <Scalar S>
S from_rational(const Rational& r) {
  return ScalarTraits<S>::from_rational(r);
}

/// Default relative tolerance for "is this entry zero" in numeric mode.
inline constexpr double kDefaultZeroTolerance = 1e-9;

}  // namespace mirror
