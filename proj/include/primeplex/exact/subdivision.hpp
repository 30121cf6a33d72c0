#pragma once

#include <span>
#include <vector>

#include "primeplex/exact/matrix.hpp"
#include "primeplex/exact/number.hpp"
#include "primeplex/exact/polynomial.hpp"

/// Exact combinatorics of barycentric subdivision.
///
/// Indices follow the face-dimension convention: i = -1 is the empty face,
/// so vectors and matrices indexed -1..d are stored with offset +1.
namespace primeplex {

/// f_{i,d}: number of i-simplices of the subdivided d-simplex whose largest
/// element is the full simplex, (i+1)! S(d+1, i+1). f_{-1,-1} = 1 and
/// f_{-1,d} = 0 for d >= 0. Throws std::invalid_argument if i > d >= -1 with
/// i >= 0, or if i < -1 / d < -1.
Integer subdivision_count(int i, int d);

/// The same numbers from f_{i,d} = sum_{j=i}^{d} C(d+1, j) f_{i-1, j-1}, with
/// no reference to Stirling numbers. Memoized.
Integer subdivision_count_recurrence(int i, int d);

/// The column (F_{-1,d}, ..., F_{d,d}): the eigenvector of the transfer matrix
/// for its top eigenvalue (d+1)!, normalised by F_{d,d} = 1.
class EigenRationals {
 public:
  EigenRationals(int d, std::vector<Rational> values);

  int dimension() const { return d_; }
  /// F_{i,d} for -1 <= i <= d.
  const Rational& operator[](int i) const;
  std::span<const Rational> values() const { return values_; }

 private:
  int d_;
  std::vector<Rational> values_;
};

/// F_{i,d} by the descending recurrence
///   F_{i,d} = (sum_{j=i+1}^{d} f_{i,j} F_{j,d}) / ((d+1)! - (i+1)!),
/// seeded with F_{d,d} = 1 and F_{-1,d} = 0 (d >= 0). d = -1 gives (1).
/// Memoized per d.
EigenRationals eigen_rationals(int d);

/// F_{i,d} for 0 <= i < d by summing over all chains i = i_0 < ... < i_l < d
/// of prod_m f_{i_m, i_{m+1}} / ((d+1)! - (i_m + 1)!), with i_{l+1} = d.
/// Exponential in d - i; intended as an independent check.
Rational eigen_rationals_direct(int d, int i);

/// H_{0,d}, ..., H_{d+1,d}: coefficients of H_d(z) = F_d(z - 1) where
/// F_d(z) = sum_{i=-1}^{d} F_{i,d} z^{d-i}, indexed so that
/// H_d(z) = sum_i H_{i,d} z^{d+1-i}.
std::vector<Rational> limit_coefficients(int d);

/// H_d(z) as a normalised polynomial.
RationalPoly h_polynomial_limit(int d);

/// F_d = (f_{i,j})_{-1 <= i,j <= d}; upper triangular with diagonal 0!, ..., (d+1)!.
TransferMatrix transfer_matrix(int d);

/// S_d = ((-1)^{d+1+i+j} C(d-j, i+1)). Maps (a_{-1}, ..., a_d), the
/// coefficients of f(z) = sum a_i z^{d-i}, to (b_{d+1}, ..., b_0), the
/// coefficients of f(z-1) = sum b_i z^{d+1-i} read from the constant term up.
ShiftMatrix shift_matrix(int d);

/// S_d^{-1} = (C(j+1, d-i)).
ShiftMatrix shift_matrix_inverse(int d);

/// H_d = (A(d+2, i+1, j+2)) built from H_{d-1} by
///   h_{i,j} = sum_{l=-1}^{j-1} h'_{i-1,l} + sum_{l=j}^{d-1} h'_{i,l},
/// with H_0 the 2x2 identity.
DescentMatrix descent_matrix(int d);

inline constexpr int kDescentBruteForceBound = 5;

/// H_d by enumerating all (d+2)! permutations of [d+2] and counting those
/// with i+1 descents and first letter j+2. Throws ResourceError when
/// d > bound.
DescentMatrix descent_matrix_bruteforce(int d, int bound = kDescentBruteForceBound);

}  // namespace primeplex
