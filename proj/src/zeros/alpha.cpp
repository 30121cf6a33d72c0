#include "primeplex/zeros/alpha.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primeplex/exact/combinatorics.hpp"
#include "primeplex/exact/subdivision.hpp"

namespace primeplex {

namespace {

double log_abs(const Integer& z) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::numbers::ln2;
}

}  // namespace

AlphaRecord alpha(const ComplexSummary& s) {
  if (s.dim < 1)
    throw std::invalid_argument("alpha: Delta_" + std::to_string(s.n) + " has dimension " + std::to_string(s.dim) + " < 1");
  AlphaRecord r;
  r.n = s.n;
  r.dim = s.dim;
  r.euler_char = s.euler_char;
  r.h1 = limit_coefficients(s.dim)[1];
  r.f_top = s.f_vector[s.dim];
  r.alpha = Rational(s.euler_char) / (r.h1 * Rational(r.f_top));
  r.alpha.canonicalize();
  if (r.alpha != 0)
    r.exponent = (log_abs(r.alpha.get_num()) - log_abs(r.alpha.get_den())) / log_abs(factorial(s.dim + 1));
  return r;
}

AlphaRecord alpha(const SieveTable& sieve, std::uint64_t n) { return alpha(summary(sieve, n)); }

std::vector<ConjectureRow> conjecture_report(const SieveTable& sieve, std::uint64_t n_max) {
  std::vector<ConjectureRow> rows;
  for_each_summary(sieve, 1, n_max, [&](const ComplexSummary& s) {
    if (s.dim < 1) return;
    ConjectureRow row;
    row.record = alpha(s);
    const Rational a = abs(row.record.alpha);
    const Integer top = factorial(s.dim + 1);
    row.within_three_halves = a * a <= Rational(pow(top, 3));
    row.within_square = a <= Rational(pow(top, 2));
    rows.push_back(std::move(row));
  });
  return rows;
}

}  // namespace primeplex
