#pragma once

// Small dense row-major matrix over any mirror::Scalar.
//
// Sizes here are tiny (n+1 <= 8 in practice), so clarity wins over blocking
// or expression templates. Elimination picks the first nonzero pivot for
// exact scalars and the largest-magnitude pivot for floating point.

#include "mirror/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace mirror {

template <Scalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik == S(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <Scalar T, class F>
  Matrix<T> map(F&& f) const {
    Matrix<T> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (const S& x : data_) m = std::max(m, magnitude(x));
    return m;
  }

  /// Determinant of the submatrix on the given (0-based) rows and columns, in the order given.
  S minor(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    if (row_idx.size() != col_idx.size()) throw std::invalid_argument("Matrix::minor: non-square selection");
    Matrix sub(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) sub(i, j) = (*this)(row_idx[i], col_idx[j]);
    return sub.determinant();
  }

  S determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::determinant: not square");
    Matrix a = *this;
    S det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t piv = a.pick_pivot(col, col);
      if (piv == rows_) return S(0);
      if (piv != col) {
        a.swap_rows(piv, col);
        det = -det;
      }
      det *= a(col, col);
      for (std::size_t r = col + 1; r < rows_; ++r) {
        if (a(r, col) == S(0)) continue;
        S factor = a(r, col) / a(col, col);
        for (std::size_t j = col; j < cols_; ++j) a(r, j) -= factor * a(col, j);
      }
    }
    return det;
  }

  /// Gauss-Jordan inverse; throws std::domain_error for a singular matrix.
  Matrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::inverse: not square");
    Matrix a = *this;
    Matrix inv = identity(rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t piv = a.pick_pivot(col, col);
      if (piv == rows_) throw std::domain_error("Matrix::inverse: singular matrix");
      if constexpr (!is_exact_v<S>) {
        if (magnitude(a(piv, col)) <= 1e-300) throw std::domain_error("Matrix::inverse: singular matrix");
      }
      a.swap_rows(piv, col);
      inv.swap_rows(piv, col);
      S p = a(col, col);
      for (std::size_t j = 0; j < cols_; ++j) {
        a(col, j) /= p;
        inv(col, j) /= p;
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == col || a(r, col) == S(0)) continue;
        S factor = a(r, col);
        for (std::size_t j = 0; j < cols_; ++j) {
          a(r, j) -= factor * a(col, j);
          inv(r, j) -= factor * inv(col, j);
        }
      }
    }
    return inv;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  // Returns rows_ when the column has no usable pivot at or below `from`.
  std::size_t pick_pivot(std::size_t col, std::size_t from) const {
    if constexpr (is_exact_v<S>) {
      for (std::size_t r = from; r < rows_; ++r)
        if (!((*this)(r, col) == S(0))) return r;
      return rows_;
    } else {
      std::size_t best = rows_;
      double best_mag = 0.0;
      for (std::size_t r = from; r < rows_; ++r) {
        double m = magnitude((*this)(r, col));
        if (m > best_mag) {
          best_mag = m;
          best = r;
        }
      }
      return best;
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <Scalar S>
double max_abs_difference(const Matrix<S>& a, const Matrix<S>& b) {
  return (a - b).max_abs();
}

}  // namespace mirror
