#pragma once

#include <cstdint>
#include <vector>

#include "primeplex/complex/fvector.hpp"
#include "primeplex/complex/sieve.hpp"
#include "primeplex/exact/polynomial.hpp"
#include "primeplex/zeros/roots.hpp"

namespace primeplex {

/// 64 + ceil(k log2((d+1)!)) bits, or `requested` if that is larger. The
/// h-polynomial of the k-th subdivision has coefficients of size about
/// (d+1)!^k, and its smallest root is about (d+1)!^-k.
mpfr_prec_t working_precision(int d, int k, mpfr_prec_t requested);

struct TrajectoryEntry {
  int k = 0;
  FVector f_vector{{Integer(1)}};
  RationalPoly h;
  RootSet roots;
  /// Largest- and smallest-modulus roots; everything else is interior.
  BigComplex rho_inf;
  BigComplex rho_0;
  std::vector<BigComplex> interior;
  /// Two roots share the largest (or smallest) modulus to within
  /// 2^(-precision/2) relative, so the choice of rho_inf (or rho_0) is arbitrary.
  bool ambiguous = false;
  bool rho_inf_certified_real = false;
  /// rho_inf / (-H_{1,d} f_d (d+1)!^k)
  BigComplex ratio_inf;
  /// |rho_0| (d+1)!^k
  BigFloat scaled_rho0;
  /// Product of the interior roots (1 when d = 1).
  BigComplex interior_product;
};

struct ZeroTrajectory {
  FVector base{{Integer(1)}};
  std::vector<TrajectoryEntry> entries;
  int dim() const { return base.dim(); }
};

/// Roots of h of the k-th subdivision for k = 0..k_max. Requires dim >= 1;
/// throws std::invalid_argument otherwise and propagates ConvergenceError.
ZeroTrajectory trajectory(const FVector& base, int k_max, mpfr_prec_t precision_bits);
/// The same for Delta_n.
ZeroTrajectory trajectory(const SieveTable& sieve, std::uint64_t n, int k_max, mpfr_prec_t precision_bits);

struct IdentityReport {
  /// |prod rho - (-chi)| / max(1, |chi|)
  double product_error = 0;
  /// |sum rho - ((d+1) - f_0)| / max(1, |(d+1) - f_0|)
  double sum_error = 0;
};

/// Vieta checks of one trajectory entry: the roots multiply to minus the
/// reduced Euler characteristic and sum to (d+1) - f_0.
IdentityReport identity_checks(const TrajectoryEntry& entry);

}  // namespace primeplex
