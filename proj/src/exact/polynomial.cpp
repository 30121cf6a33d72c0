#include "primeplex/exact/polynomial.hpp"

#include <sstream>

#include "primeplex/exact/combinatorics.hpp"

namespace primeplex {

RationalPoly::RationalPoly(std::vector<Rational> descending) : coeffs_(std::move(descending)) {
  std::size_t first = 0;
  while (first + 1 < coeffs_.size() && coeffs_[first] == 0) ++first;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  for (auto& c : coeffs_) c.canonicalize();
}

RationalPoly RationalPoly::monomial(int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
  c.front() = 1;
  return RationalPoly(std::move(c));
}

Rational RationalPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree() - power)];
}

Rational RationalPoly::operator()(const Rational& z) const {
  Rational acc = 0;
  for (const auto& c : coeffs_) acc = acc * z + c;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (degree() == 0) return RationalPoly();
  std::vector<Rational> d;
  d.reserve(coeffs_.size() - 1);
  for (int p = degree(); p >= 1; --p) d.push_back(coefficient(p) * p);
  return RationalPoly(std::move(d));
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    Rational c = coefficient(p);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    Rational mag = abs(c);
    const bool unit = mag == 1;
    if (!unit || p == 0) {
      if (mag.get_den() != 1 && p > 0)
        out << "(" << mag.get_str() << ")";
      else
        out << mag.get_str();
    }
    if (p >= 1) out << "z";
    if (p >= 2) out << "^" << p;
    first = false;
  }
  return out.str();
}

std::vector<Rational> shift_coefficients(std::span<const Rational> descending) {
  // Coefficient of z^m in sum_p c_p (z-1)^p is sum_{p>=m} c_p C(p,m) (-1)^{p-m}.
  const int n = static_cast<int>(descending.size()) - 1;
  std::vector<Rational> out(descending.size(), Rational(0));
  for (int m = 0; m <= n; ++m) {
    Rational acc = 0;
    for (int p = m; p <= n; ++p) {
      const Rational& c = descending[static_cast<std::size_t>(n - p)];
      if (c == 0) continue;
      Rational term = c * Rational(binomial(p, m));
      if ((p - m) % 2) acc -= term; else acc += term;
    }
    out[static_cast<std::size_t>(n - m)] = acc;
  }
  return out;
}

RationalPoly poly_shift(const RationalPoly& f) { return RationalPoly(shift_coefficients(f.coefficients())); }

}  // namespace primeplex
