#pragma once

#include <span>
#include <string>
#include <vector>

#include "primeplex/exact/number.hpp"
#include "primeplex/exact/polynomial.hpp"

namespace primeplex {

/// Face counts f_{-1}, f_0, ..., f_d of a d-dimensional complex, with
/// f_{-1} = 1 for the empty face and f_d >= 1.
class FVector {
 public:
  /// counts[0] is f_{-1}. Throws std::invalid_argument on a malformed vector.
  explicit FVector(std::vector<Integer> counts);

  int dim() const { return static_cast<int>(counts_.size()) - 2; }
  /// f_i for -1 <= i <= dim().
  const Integer& operator[](int i) const;
  std::span<const Integer> counts() const { return counts_; }

  /// sum_{i=-1}^{d} (-1)^i f_i
  Integer reduced_euler_characteristic() const;

  /// f(z) = sum_i f_i z^{d-i}
  RationalPoly f_polynomial() const;

  /// "(1,3,1)"
  std::string to_string() const;

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<Integer> counts_;
};

/// h(z) = f(z - 1). Monic, with constant term (-1)^d times the reduced Euler
/// characteristic. For the empty complex {emptyset} (d = -1) this is the
/// constant 1.
RationalPoly h_poly(const FVector& fv);

}  // namespace primeplex
