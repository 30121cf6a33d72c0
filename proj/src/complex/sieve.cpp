#include "primeplex/complex/sieve.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "primeplex/errors.hpp"

namespace primeplex {

SieveTable::SieveTable(std::uint64_t limit, std::uint64_t memory_budget) : limit_(limit) {
  if (limit < 1) throw std::invalid_argument("sieve limit must be >= 1");
  if (limit >= std::numeric_limits<std::uint32_t>::max() || (limit + 1) > memory_budget / bytes_per_entry())
    throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds memory budget of " +
                        std::to_string(memory_budget) + " bytes");
  const std::size_t n = static_cast<std::size_t>(limit) + 1;
  spf_.assign(n, 0);
  mu_.assign(n, 0);
  weight_.assign(n, 0);
  mertens_.assign(n, 0);

  std::vector<std::uint32_t> primes;
  mu_[1] = 1;
  for (std::uint32_t i = 2; i < n; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      mu_[i] = -1;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = std::uint64_t{i} * p;
      if (p > spf_[i] || ip >= n) break;
      spf_[ip] = p;
      mu_[ip] = (p == spf_[i]) ? 0 : static_cast<std::int8_t>(-mu_[i]);
    }
  }

  weight_[1] = 0;
  for (std::uint32_t k = 2; k < n; ++k) {
    std::uint32_t rest = k;
    int w = 0;
    while (rest > 1) {
      const std::uint32_t p = spf_[rest];
      rest /= p;
      if (rest % p == 0) {
        w = -1;
        break;
      }
      ++w;
    }
    weight_[k] = static_cast<std::int8_t>(w);
  }

  std::int32_t running = 0;
  for (std::size_t k = 1; k < n; ++k) {
    running += mu_[k];
    mertens_[k] = running;
  }
}

void SieveTable::check(std::uint64_t k, const char* what) const {
  if (k > limit_)
    throw std::out_of_range(std::string(what) + ": argument " + std::to_string(k) + " exceeds sieve limit " +
                            std::to_string(limit_));
}

std::uint32_t SieveTable::smallest_prime_factor(std::uint64_t k) const {
  check(k, "smallest_prime_factor");
  if (k < 2) throw std::invalid_argument("smallest_prime_factor: argument must be >= 2");
  return spf_[k];
}

int SieveTable::moebius(std::uint64_t k) const {
  check(k, "moebius");
  if (k < 1) throw std::invalid_argument("moebius: argument must be >= 1");
  return mu_[k];
}

int SieveTable::squarefree_weight(std::uint64_t k) const {
  check(k, "squarefree_weight");
  if (k < 1) throw std::invalid_argument("squarefree_weight: argument must be >= 1");
  return weight_[k];
}

std::int64_t SieveTable::mertens(std::uint64_t x) const {
  check(x, "mertens");
  return mertens_[x];
}

std::uint64_t SieveTable::weight_count(int d, std::uint64_t x) const {
  check(x, "weight_count");
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= x; ++k)
    if (weight_[k] == d) ++count;
  return count;
}

}  // namespace primeplex
