#include "primeplex/complex/prime_complex.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "primeplex/errors.hpp"

namespace primeplex {

namespace {

// More than enough weights for any 64-bit n (the 16th primorial exceeds 2^64).
constexpr int kMaxWeight = 20;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

ComplexSummary make_summary(std::uint64_t n, int dim, const std::array<std::uint64_t, kMaxWeight + 1>& counts,
                            std::int64_t mertens) {
  if (dim + 2 <= kMaxWeight && counts[static_cast<std::size_t>(dim + 2)] != 0)
    throw InconsistencyError("Delta_" + std::to_string(n) + ": squarefree integer of weight " +
                             std::to_string(dim + 2) + " found above the primorial dimension");
  if (dim >= 0 && counts[static_cast<std::size_t>(dim + 1)] == 0)
    throw InconsistencyError("Delta_" + std::to_string(n) + ": no squarefree integer of weight " +
                             std::to_string(dim + 1) + " below the primorial");
  std::vector<Integer> f;
  f.emplace_back(1);
  for (int i = 0; i <= dim; ++i) f.emplace_back(static_cast<unsigned long>(counts[static_cast<std::size_t>(i + 1)]));
  ComplexSummary s;
  s.n = n;
  s.dim = dim;
  s.f_vector = FVector(std::move(f));
  s.euler_char = s.f_vector.reduced_euler_characteristic();
  s.mertens = mertens;
  if (s.euler_char != Integer(static_cast<long>(-mertens)))
    throw InconsistencyError("Delta_" + std::to_string(n) + ": reduced Euler characteristic " + s.euler_char.get_str() +
                             " differs from -M(n) = " + std::to_string(-mertens));
  return s;
}

}  // namespace

int dim_of(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("dim_of: n must be >= 1");
  int d = -1;
  unsigned __int128 primorial = 1;
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime(p)) continue;
    primorial *= p;
    if (primorial > n) return d;
    ++d;
  }
}

ComplexSummary summary(const SieveTable& sieve, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("summary: n must be >= 1");
  if (n > sieve.limit())
    throw std::out_of_range("summary: n=" + std::to_string(n) + " exceeds sieve limit " + std::to_string(sieve.limit()));
  std::array<std::uint64_t, kMaxWeight + 1> counts{};
  for (std::uint64_t k = 1; k <= n; ++k) {
    const int w = sieve.squarefree_weight(k);
    if (w >= 0) ++counts[static_cast<std::size_t>(w)];
  }
  return make_summary(n, dim_of(n), counts, sieve.mertens(n));
}

void for_each_summary(const SieveTable& sieve, std::uint64_t from, std::uint64_t to,
                      const std::function<void(const ComplexSummary&)>& fn) {
  if (from < 1 || from > to) throw std::invalid_argument("for_each_summary: need 1 <= from <= to");
  if (to > sieve.limit())
    throw std::out_of_range("for_each_summary: " + std::to_string(to) + " exceeds sieve limit " +
                            std::to_string(sieve.limit()));
  std::array<std::uint64_t, kMaxWeight + 1> counts{};
  for (std::uint64_t k = 1; k <= to; ++k) {
    const int w = sieve.squarefree_weight(k);
    if (w >= 0) ++counts[static_cast<std::size_t>(w)];
    if (k >= from) fn(make_summary(k, dim_of(k), counts, sieve.mertens(k)));
  }
}

std::vector<ComplexSummary> summaries(const SieveTable& sieve, std::uint64_t from, std::uint64_t to) {
  std::vector<ComplexSummary> out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  for_each_summary(sieve, from, to, [&](const ComplexSummary& s) { out.push_back(s); });
  return out;
}

}  // namespace primeplex
