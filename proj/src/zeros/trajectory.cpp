#include "primeplex/zeros/trajectory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primeplex/complex/prime_complex.hpp"
#include "primeplex/exact/combinatorics.hpp"
#include "primeplex/exact/subdivision.hpp"
#include "primeplex/zeros/growth.hpp"

namespace primeplex {

namespace {

// Seeds: the asymptotic dominant root, then the rest spread over the unit
// circle with a fixed irrational twist so no seed lands on the real axis.
std::vector<BigComplex> seeds_for(const Rational& dominant, int count, mpfr_prec_t bits) {
  std::vector<BigComplex> seeds;
  seeds.emplace_back(BigFloat(dominant, bits), BigFloat(bits));
  const int rest = count - 1;
  for (int j = 0; j < rest; ++j) {
    const double angle = 2 * std::numbers::pi * (j + 0.5) / rest + 0.1 * std::numbers::sqrt2;
    seeds.emplace_back(BigFloat(std::cos(angle), bits), BigFloat(std::sin(angle), bits));
  }
  return seeds;
}

bool same_modulus(const BigComplex& a, const BigComplex& b, mpfr_prec_t bits) {
  const BigFloat ma = abs(a), mb = abs(b);
  const BigFloat scale = ma > mb ? ma : mb;
  if (scale.is_zero()) return true;
  return abs(ma - mb) <= exp2i(-(bits / 2), bits) * scale;
}

}  // namespace

mpfr_prec_t working_precision(int d, int k, mpfr_prec_t requested) {
  const double growth = std::log2(factorial(d + 1).get_d()) * k;
  const auto needed = static_cast<mpfr_prec_t>(64 + std::ceil(growth - 1e-9));
  return std::max(needed, requested);
}

ZeroTrajectory trajectory(const FVector& base, int k_max, mpfr_prec_t precision_bits) {
  const int d = base.dim();
  if (d < 1) throw std::invalid_argument("trajectory: dimension must be >= 1, got " + std::to_string(d));
  if (k_max < 0) throw std::invalid_argument("trajectory: k_max must be >= 0");
  if (k_max > kDefaultMaxSubdivisions)
    throw std::invalid_argument("trajectory: k_max above " + std::to_string(kDefaultMaxSubdivisions));

  const Rational h1 = limit_coefficients(d)[1];
  const Integer top = factorial(d + 1);
  const TransferMatrix f = transfer_matrix(d);

  ZeroTrajectory out;
  out.base = base;
  std::vector<Integer> counts(base.counts().begin(), base.counts().end());
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) counts = apply<Integer, Integer>(f, counts);
    const mpfr_prec_t bits = working_precision(d, k, precision_bits);
    TrajectoryEntry e;
    e.k = k;
    e.f_vector = FVector(counts);
    e.h = h_poly(e.f_vector);

    const Rational asymptote = -h1 * Rational(base[d]) * Rational(pow(top, static_cast<unsigned long>(k)));
    RootOptions options;
    options.seeds = seeds_for(asymptote, d + 1, bits);
    e.roots = find_roots(e.h, bits, options);

    const auto& roots = e.roots.roots;
    e.rho_0 = roots.front().value;
    e.rho_inf = roots.back().value;
    e.rho_inf_certified_real = roots.back().real_certified;
    e.ambiguous = same_modulus(roots[0].value, roots[1].value, bits) ||
                  same_modulus(roots[roots.size() - 1].value, roots[roots.size() - 2].value, bits);
    e.interior_product = BigComplex(BigFloat(1L, bits), BigFloat(bits));
    for (std::size_t i = 1; i + 1 < roots.size(); ++i) {
      e.interior.push_back(roots[i].value);
      e.interior_product = e.interior_product * roots[i].value;
    }
    const BigFloat denom(asymptote, bits);
    e.ratio_inf = BigComplex(e.rho_inf.re / denom, e.rho_inf.im / denom);
    e.scaled_rho0 = abs(e.rho_0) * BigFloat(pow(top, static_cast<unsigned long>(k)), bits);
    out.entries.push_back(std::move(e));
  }
  return out;
}

ZeroTrajectory trajectory(const SieveTable& sieve, std::uint64_t n, int k_max, mpfr_prec_t precision_bits) {
  const int d = dim_of(n);
  if (d < 1) throw std::invalid_argument("trajectory: Delta_" + std::to_string(n) + " has dimension " + std::to_string(d) + " < 1");
  return trajectory(summary(sieve, n).f_vector, k_max, precision_bits);
}

IdentityReport identity_checks(const TrajectoryEntry& entry) {
  const mpfr_prec_t bits = entry.roots.precision_bits;
  const int d = entry.f_vector.dim();
  BigComplex product(BigFloat(1L, bits), BigFloat(bits));
  BigComplex sum(bits);
  for (const auto& r : entry.roots.roots) {
    product = product * r.value;
    sum = sum + r.value;
  }
  const Integer chi = entry.f_vector.reduced_euler_characteristic();
  const Integer expected_sum = Integer(d + 1) - entry.f_vector[0];
  auto relative = [bits](const BigComplex& got, const Integer& want) {
    const BigFloat w(want, bits);
    const BigFloat err = abs(BigComplex(got.re - w, got.im));
    const BigFloat scale = std::max(BigFloat(1L, bits), abs(w));
    return (err / scale).to_double();
  };
  return {relative(product, Integer(-chi)), relative(sum, expected_sum)};
}

}  // namespace primeplex
