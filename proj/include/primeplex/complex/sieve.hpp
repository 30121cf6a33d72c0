#pragma once

#include <cstdint>
#include <vector>

namespace primeplex {

inline constexpr std::uint64_t kDefaultSieveLimit = 1'000'000;
inline constexpr std::uint64_t kDefaultSieveMemoryBudget = std::uint64_t{1} << 30;

/// Linear sieve up to a fixed limit: smallest prime factors, the Moebius
/// function, squarefree weights and prefix sums of mu (the Mertens function).
///
/// Moebius values come from the sieve recurrence mu(i p) = -mu(i) or 0;
/// weights are recomputed independently by factoring with the smallest prime
/// factor table.
class SieveTable {
 public:
  /// Throws ResourceError if the tables would exceed memory_budget bytes.
  explicit SieveTable(std::uint64_t limit, std::uint64_t memory_budget = kDefaultSieveMemoryBudget);

  std::uint64_t limit() const { return limit_; }

  /// Smallest prime factor of k, 2 <= k <= limit.
  std::uint32_t smallest_prime_factor(std::uint64_t k) const;
  /// mu(k), 1 <= k <= limit.
  int moebius(std::uint64_t k) const;
  /// Number of prime factors of k if k is squarefree, -1 otherwise.
  int squarefree_weight(std::uint64_t k) const;

  /// M(x) = sum_{k <= x} mu(k). Throws std::out_of_range above the limit.
  std::int64_t mertens(std::uint64_t x) const;

  /// pi_d(x): squarefree k <= x with exactly d prime factors. O(x).
  std::uint64_t weight_count(int d, std::uint64_t x) const;

  static std::uint64_t bytes_per_entry() { return sizeof(std::uint32_t) + 2 * sizeof(std::int8_t) + sizeof(std::int32_t); }

 private:
  void check(std::uint64_t k, const char* what) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::int8_t> mu_;
  std::vector<std::int8_t> weight_;
  std::vector<std::int32_t> mertens_;
};

inline SieveTable build_sieve(std::uint64_t limit) { return SieveTable(limit); }

}  // namespace primeplex
