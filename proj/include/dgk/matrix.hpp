#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dgk/error.hpp"
#include "dgk/scalar.hpp"

namespace dgk {

// Dense row-major matrix. Everything here is desk scale (n <= a few
// hundred), so O(n^3) loops and value semantics are fine.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, scalar_traits<T>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<T>::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (scalar_traits<T>::is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
  }

  T row_sum(std::size_t i) const {
    T s = scalar_traits<T>::zero();
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
    return s;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_, cols_;
  std::vector<T> data_;
};

// p * A for a row vector p.
template <typename T>
std::vector<T> row_times(const std::vector<T>& p, const Matrix<T>& a) {
  if (p.size() != a.rows()) throw DimensionMismatch("row vector length");
  std::vector<T> r(a.cols(), scalar_traits<T>::zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (scalar_traits<T>::is_zero(p[i])) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] += p[i] * a(i, j);
  }
  return r;
}

// A * x for a column vector x.
template <typename T>
std::vector<T> times_column(const Matrix<T>& a, const std::vector<T>& x) {
  if (x.size() != a.cols()) throw DimensionMismatch("column vector length");
  std::vector<T> r(a.rows(), scalar_traits<T>::zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
  return r;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot length");
  T s = scalar_traits<T>::zero();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Solves A X = B by Gaussian elimination with pivoting; one factorization
// shared across all columns of B. Exact mode picks any nonzero pivot,
// float mode picks the largest.
template <typename T>
Matrix<T> solve(Matrix<T> a, Matrix<T> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw DimensionMismatch("solve shape");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (scalar_traits<T>::better_pivot(a(r, col), a(piv, col))) piv = r;
    if (scalar_traits<T>::is_zero(a(piv, col)))
      throw SingularSystem("singular matrix in solve, column " +
                           std::to_string(col));
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(piv, j), b(col, j));
    }
    T inv_p = scalar_traits<T>::one() / a(col, col);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || scalar_traits<T>::is_zero(a(r, col))) continue;
      T f = a(r, col) * inv_p;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) -= f * b(col, j);
    }
  }
  Matrix<T> x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    T inv_p = scalar_traits<T>::one() / a(i, i);
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = b(i, j) * inv_p;
  }
  return x;
}

// Solves y A = b for a row vector y.
template <typename T>
std::vector<T> solve_left(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.rows();
  Matrix<T> at(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at(i, j) = a(j, i);
  Matrix<T> rhs(n, 1);
  for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = b[i];
  Matrix<T> x = solve(std::move(at), std::move(rhs));
  std::vector<T> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = x(i, 0);
  return y;
}

// Row rank by elimination; used by the exact test oracles as well.
template <typename T>
std::size_t rank(Matrix<T> a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    for (std::size_t i = r; i < a.rows(); ++i)
      if (scalar_traits<T>::better_pivot(a(i, col), a(piv, col))) piv = i;
    if constexpr (scalar_traits<T>::exact) {
      if (scalar_traits<T>::is_zero(a(piv, col))) continue;
    } else {
      if (std::abs(a(piv, col)) < 1e-10) continue;
    }
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (scalar_traits<T>::is_zero(a(i, col))) continue;
      T f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

template <typename T>
Matrix<T> to_double_matrix(const Matrix<Rational>& a) {
  static_assert(std::is_same_v<T, double>);
  Matrix<double> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).get_d();
  return r;
}

inline double inf_norm_diff(const Matrix<double>& a, const Matrix<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j) - b(i, j));
    if (s > m) m = s;
  }
  return m;
}

}  // namespace dgk
