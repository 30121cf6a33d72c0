#pragma once

#include <span>

#include "primeplex/exact/matrix.hpp"

namespace primeplex {

/// Exact determinant of an integer matrix by Bareiss fraction-free
/// elimination.
Integer bareiss_determinant(Matrix<Integer> m);

/// Sign of det(m) for a rational matrix. Rows are first scaled by the
/// (positive) lcm of their denominators, which leaves the sign unchanged.
int determinant_sign(const Matrix<Rational>& m);

/// True when m is square with negative diagonal, positive off-diagonal
/// entries and, in every column, off-diagonal sum < |diagonal|.
bool is_column_dominant(const Matrix<Rational>& m);

/// Sign of det(m) for a column-dominant m; throws std::invalid_argument if m
/// is not column-dominant. Such determinants have sign (-1)^n.
int det_sign_check(const Matrix<Rational>& m);

/// Sign of det(m_j), where m_j is the column-dominant m with column j
/// replaced by (-b_1, ..., -b_n) for positive b. Also (-1)^n.
int det_sign_check_replaced_column(const Matrix<Rational>& m, std::size_t column, std::span<const Rational> b);

}  // namespace primeplex
