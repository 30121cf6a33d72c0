#pragma once

#include <span>
#include <string>
#include <vector>

#include "primeplex/exact/number.hpp"

namespace primeplex {

/// Univariate polynomial with exact rational coefficients, stored highest
/// degree first. Leading zeros are stripped on construction; the zero
/// polynomial has degree 0 and a single zero coefficient.
class RationalPoly {
 public:
  RationalPoly() : coeffs_{Rational(0)} {}
  explicit RationalPoly(std::vector<Rational> descending);

  static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }
  /// z^degree
  static RationalPoly monomial(int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  bool is_monic() const { return coeffs_.front() == 1; }

  /// Highest degree first.
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of z^power; zero outside [0, degree].
  Rational coefficient(int power) const;
  const Rational& leading() const { return coeffs_.front(); }
  const Rational& constant_term() const { return coeffs_.back(); }

  Rational operator()(const Rational& z) const;

  RationalPoly derivative() const;

  /// e.g. "z^3 + 7z^2 - 10z + 3"
  std::string to_string() const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// f(z - 1), expanded exactly. Applied to an f-polynomial it yields the
/// h-polynomial.
RationalPoly poly_shift(const RationalPoly& f);

/// The coefficients of f(z - 1) for f given highest degree first, without
/// stripping leading zeros.
std::vector<Rational> shift_coefficients(std::span<const Rational> descending);

}  // namespace primeplex
