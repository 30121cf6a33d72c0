#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "primeplex/complex/fvector.hpp"
#include "primeplex/complex/sieve.hpp"

namespace primeplex {

/// dim Delta_n: the largest d with p_1 p_2 ... p_{d+1} <= n, and -1 for n = 1.
int dim_of(std::uint64_t n);

/// Delta_n described by its face counts.
struct ComplexSummary {
  std::uint64_t n = 0;
  int dim = -1;
  FVector f_vector{{Integer(1)}};
  /// reduced Euler characteristic, from the alternating face-count sum
  Integer euler_char;
  /// M(n), from the sieve's Moebius prefix sums
  std::int64_t mertens = 0;
};

/// f_i = pi_{i+1}(n) for 0 <= i <= dim_of(n). Throws InconsistencyError if
/// the alternating sum differs from -M(n), or if the weight counts disagree
/// with dim_of(n).
ComplexSummary summary(const SieveTable& sieve, std::uint64_t n);

/// Calls fn with summary(sieve, n) for from <= n <= to in increasing order,
/// in a single O(to) sweep.
void for_each_summary(const SieveTable& sieve, std::uint64_t from, std::uint64_t to,
                      const std::function<void(const ComplexSummary&)>& fn);

std::vector<ComplexSummary> summaries(const SieveTable& sieve, std::uint64_t from, std::uint64_t to);

}  // namespace primeplex
