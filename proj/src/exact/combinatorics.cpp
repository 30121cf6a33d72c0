#include "primeplex/exact/combinatorics.hpp"

#include <stdexcept>
#include <string>

#include "primeplex/errors.hpp"

namespace primeplex {

namespace {
const Integer kZero = 0;
}

CombinatorialTables::CombinatorialTables(int capacity) : capacity_(capacity) {
  if (capacity < 1) throw std::invalid_argument("CombinatorialTables: capacity must be positive");
  const auto n = static_cast<std::size_t>(capacity) + 1;

  factorial_.resize(n);
  factorial_[0] = 1;
  for (std::size_t m = 1; m < n; ++m) factorial_[m] = factorial_[m - 1] * static_cast<unsigned long>(m);

  binomial_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    binomial_[a].resize(a + 1);
    binomial_[a][0] = 1;
    binomial_[a][a] = 1;
    for (std::size_t b = 1; b < a; ++b) binomial_[a][b] = binomial_[a - 1][b - 1] + binomial_[a - 1][b];
  }

  // S(j, k) = k S(j-1, k) + S(j-1, k-1)
  stirling_.resize(n);
  stirling_[0] = {Integer(1)};
  for (std::size_t j = 1; j < n; ++j) {
    stirling_[j].assign(j + 1, Integer(0));
    for (std::size_t k = 1; k <= j; ++k) {
      Integer s = stirling_[j - 1].size() > k ? Integer(stirling_[j - 1][k] * static_cast<unsigned long>(k)) : Integer(0);
      s += stirling_[j - 1][k - 1];
      stirling_[j][k] = s;
    }
  }
}

void CombinatorialTables::check(int a) const {
  if (a > capacity_)
    throw ResourceError("combinatorial table argument " + std::to_string(a) + " exceeds capacity " +
                        std::to_string(capacity_));
}

const Integer& CombinatorialTables::factorial(int m) const {
  if (m < 0) throw std::invalid_argument("factorial of negative argument");
  check(m);
  return factorial_[static_cast<std::size_t>(m)];
}

const Integer& CombinatorialTables::binomial(int a, int b) const {
  if (a < 0 || b < 0 || b > a) return kZero;
  check(a);
  return binomial_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

const Integer& CombinatorialTables::stirling2(int j, int k) const {
  if (j < 0 || k < 0 || k > j) return kZero;
  check(j);
  return stirling_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
}

const CombinatorialTables& tables() {
  static const CombinatorialTables instance(kDefaultTableCapacity);
  return instance;
}

}  // namespace primeplex
