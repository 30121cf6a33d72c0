#pragma once

#include <vector>

#include "primeplex/exact/polynomial.hpp"
#include "primeplex/zeros/bigfloat.hpp"

namespace primeplex {

struct Root {
  BigComplex value;
  /// Backward residual |p(z)| / sum_i |c_i| |z|^i of the monic polynomial.
  BigFloat residual;
  /// The imaginary part was set to zero after an exact sign change of p was
  /// found on a rational interval around the real part.
  bool real_certified = false;
};

struct RootOptions {
  /// Initial guesses; missing ones are filled in from the Newton polygon of
  /// the coefficient moduli.
  std::vector<BigComplex> seeds;
  /// 0 picks a limit from the degree and precision.
  int max_iterations = 0;
};

struct RootSet {
  mpfr_prec_t precision_bits = 0;
  /// Sorted by modulus, then real part, then imaginary part.
  std::vector<Root> roots;
  int iterations = 0;
  BigFloat max_residual;
};

/// All complex roots of p with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration at the given precision. Exact zero roots are deflated first and
/// reported as exact zeros. Every returned residual is <= 2^(-bits/2);
/// otherwise ConvergenceError is thrown. Throws std::invalid_argument for
/// constant p.
RootSet find_roots(const RationalPoly& p, mpfr_prec_t precision_bits, const RootOptions& options = {});

}  // namespace primeplex
