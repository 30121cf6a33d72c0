#include "primeplex/exact/determinant.hpp"

#include <stdexcept>
#include <utility>

namespace primeplex {

Integer bareiss_determinant(Matrix<Integer> m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign_flip = 1;
  Integer prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  Integer det = m(n - 1, n - 1);
  if (sign_flip < 0) det = -det;
  return det;
}

int determinant_sign(const Matrix<Rational>& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix<Integer> scaled(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational v = m(r, c) * Rational(lcm);
      scaled(r, c) = v.get_num();
    }
  }
  return sgn(bareiss_determinant(std::move(scaled)));
}

bool is_column_dominant(const Matrix<Rational>& m) {
  if (!m.square() || m.rows() == 0) return false;
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) {
    if (m(j, j) >= 0) return false;
    Rational off = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      if (m(i, j) <= 0) return false;
      off += m(i, j);
    }
    if (!(off < -m(j, j))) return false;
  }
  return true;
}

int det_sign_check(const Matrix<Rational>& m) {
  if (!is_column_dominant(m)) throw std::invalid_argument("det_sign_check: matrix is not column-dominant");
  return determinant_sign(m);
}

int det_sign_check_replaced_column(const Matrix<Rational>& m, std::size_t column, std::span<const Rational> b) {
  if (!is_column_dominant(m)) throw std::invalid_argument("det_sign_check: matrix is not column-dominant");
  if (column >= m.cols() || b.size() != m.rows())
    throw std::invalid_argument("det_sign_check: replacement column has wrong shape");
  Matrix<Rational> replaced = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (b[i] <= 0) throw std::invalid_argument("det_sign_check: replacement entries must be positive");
    replaced(i, column) = -b[i];
  }
  return determinant_sign(replaced);
}

}  // namespace primeplex
