#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primeplex/complex/prime_complex.hpp"
#include "primeplex/exact/number.hpp"

namespace primeplex {

/// alpha_n = chi(Delta_n) / (H_{1,d} f_d) with d = dim Delta_n >= 1.
struct AlphaRecord {
  std::uint64_t n = 0;
  int dim = 0;
  Integer euler_char;
  Rational h1;
  Integer f_top;
  Rational alpha;
  /// ln|alpha| / ln((d+1)!), absent when alpha = 0.
  std::optional<double> exponent;
};

/// Throws std::invalid_argument when the dimension is below 1.
AlphaRecord alpha(const ComplexSummary& s);
AlphaRecord alpha(const SieveTable& sieve, std::uint64_t n);

struct ConjectureRow {
  AlphaRecord record;
  /// |alpha| <= (d+1)!^{3/2}, checked as |alpha|^2 <= (d+1)!^3.
  bool within_three_halves = false;
  /// |alpha| <= (d+1)!^2
  bool within_square = false;
};

/// One row per n <= n_max whose complex has dimension >= 1. Reporting only.
std::vector<ConjectureRow> conjecture_report(const SieveTable& sieve, std::uint64_t n_max);

}  // namespace primeplex
