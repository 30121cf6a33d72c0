#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primeplex/exact/number.hpp"

namespace primeplex {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Square matrix of size d+2 indexed by -1 <= i, j <= d, the index range of
/// face dimensions of a d-dimensional complex. Storage is 0-based with
/// offset +1.
template <class T>
class DimMatrix {
 public:
  explicit DimMatrix(int d) : d_(d), m_(static_cast<std::size_t>(d + 2), static_cast<std::size_t>(d + 2)) {
    if (d < -1) throw std::invalid_argument("DimMatrix: dimension must be >= -1");
  }

  int dimension() const { return d_; }
  std::size_t size() const { return m_.rows(); }

  T& operator()(int i, int j) { return m_(offset(i), offset(j)); }
  const T& operator()(int i, int j) const { return m_(offset(i), offset(j)); }

  const Matrix<T>& storage() const { return m_; }

  friend bool operator==(const DimMatrix& a, const DimMatrix& b) { return a.d_ == b.d_ && a.m_ == b.m_; }

  friend DimMatrix operator*(const DimMatrix& a, const DimMatrix& b) {
    if (a.d_ != b.d_) throw std::invalid_argument("DimMatrix product: dimension mismatch");
    DimMatrix out(a.d_);
    out.m_ = a.m_ * b.m_;
    return out;
  }

  static DimMatrix identity(int d) {
    DimMatrix m(d);
    m.m_ = Matrix<T>::identity(static_cast<std::size_t>(d + 2));
    return m;
  }

 private:
  std::size_t offset(int i) const {
    if (i < -1 || i > d_) throw std::out_of_range("DimMatrix index " + std::to_string(i) + " outside [-1, " + std::to_string(d_) + "]");
    return static_cast<std::size_t>(i + 1);
  }

  int d_;
  Matrix<T> m_;
};

using TransferMatrix = DimMatrix<Integer>;
using ShiftMatrix = DimMatrix<Integer>;
using DescentMatrix = DimMatrix<Integer>;

/// m * v for a column vector v stored in the same -1-based order.
template <class T, class U>
std::vector<U> apply(const DimMatrix<T>& m, std::span<const U> v) {
  if (v.size() != m.size()) throw std::invalid_argument("apply: vector length mismatch");
  const int d = m.dimension();
  std::vector<U> out(v.size());
  for (int i = -1; i <= d; ++i) {
    U acc = 0;
    for (int j = -1; j <= d; ++j) {
      const T& entry = m(i, j);
      if (entry != 0) acc += U(entry) * v[static_cast<std::size_t>(j + 1)];
    }
    out[static_cast<std::size_t>(i + 1)] = acc;
  }
  return out;
}

template <class T>
Matrix<T> power(const Matrix<T>& m, unsigned k) {
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> base = m;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

/// Exact solution of a x = b for square nonsingular a (Gaussian elimination
/// with first-nonzero pivoting). Throws std::domain_error if a is singular.
std::vector<Rational> solve_exact(Matrix<Rational> a, std::vector<Rational> b);

}  // namespace primeplex
