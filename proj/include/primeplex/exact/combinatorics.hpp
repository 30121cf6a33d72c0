#pragma once

#include <vector>

#include "primeplex/exact/number.hpp"

namespace primeplex {

/// Memoized factorials, binomial coefficients and Stirling numbers of the
/// second kind for arguments up to a fixed capacity. Immutable once built, so
/// a shared instance may be read from any thread.
class CombinatorialTables {
 public:
  explicit CombinatorialTables(int capacity);

  int capacity() const { return capacity_; }

  /// m! for 0 <= m <= capacity.
  const Integer& factorial(int m) const;
  /// C(a, b); zero when b < 0, b > a or a < 0.
  const Integer& binomial(int a, int b) const;
  /// S(j, k); zero when k > j or either argument is negative. S(0, 0) = 1.
  const Integer& stirling2(int j, int k) const;

 private:
  void check(int a) const;

  int capacity_;
  std::vector<Integer> factorial_;
  std::vector<std::vector<Integer>> binomial_;
  std::vector<std::vector<Integer>> stirling_;
};

inline constexpr int kDefaultTableCapacity = 192;

/// Process-wide tables with kDefaultTableCapacity, built on first use.
const CombinatorialTables& tables();

inline const Integer& factorial(int m) { return tables().factorial(m); }
inline const Integer& binomial(int a, int b) { return tables().binomial(a, b); }
inline const Integer& stirling2(int j, int k) { return tables().stirling2(j, k); }

}  // namespace primeplex
