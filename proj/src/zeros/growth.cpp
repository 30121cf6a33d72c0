#include "primeplex/zeros/growth.hpp"

#include <stdexcept>
#include <string>

#include "primeplex/errors.hpp"
#include "primeplex/exact/combinatorics.hpp"
#include "primeplex/exact/matrix.hpp"
#include "primeplex/exact/subdivision.hpp"

namespace primeplex {

FVector subdivided_f(const FVector& fv, int k, int max_k) {
  if (k < 0) throw std::invalid_argument("subdivided_f: k must be >= 0");
  if (k > max_k)
    throw ResourceError("subdivided_f: k=" + std::to_string(k) + " exceeds the limit " + std::to_string(max_k));
  if (fv.dim() < 0 || k == 0) return fv;
  const TransferMatrix f = transfer_matrix(fv.dim());
  std::vector<Integer> v(fv.counts().begin(), fv.counts().end());
  for (int step = 0; step < k; ++step) v = apply<Integer, Integer>(f, v);
  return FVector(std::move(v));
}

GrowthExpansion::GrowthExpansion(const FVector& fv) : d_(fv.dim()) {
  if (d_ < 0) throw std::invalid_argument("growth_expansion: dimension must be >= 0");
  std::vector<FVector> history;
  for (int k = 0; k <= d_; ++k) history.push_back(subdivided_f(fv, k, d_));
  c_.resize(static_cast<std::size_t>(d_ + 1));
  for (int i = 0; i <= d_; ++i) {
    const int unknowns = d_ - i + 1;
    Matrix<Rational> a(static_cast<std::size_t>(unknowns), static_cast<std::size_t>(unknowns));
    std::vector<Rational> b(static_cast<std::size_t>(unknowns));
    for (int k = 0; k < unknowns; ++k) {
      for (int j = 0; j < unknowns; ++j)
        a(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = Rational(pow(factorial(d_ + 1 - j), static_cast<unsigned long>(k)));
      b[static_cast<std::size_t>(k)] = Rational(history[static_cast<std::size_t>(k)][i]);
    }
    c_[static_cast<std::size_t>(i)] = solve_exact(std::move(a), std::move(b));
  }
}

const Rational& GrowthExpansion::coefficient(int j, int i) const {
  if (i < 0 || i > d_ || j < 0 || j > d_ - i) throw std::out_of_range("GrowthExpansion::coefficient: index out of range");
  return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Rational GrowthExpansion::evaluate(int i, int k) const {
  if (k < 0) throw std::invalid_argument("GrowthExpansion::evaluate: k must be >= 0");
  Rational acc = 0;
  for (int j = 0; j <= d_ - i; ++j)
    acc += coefficient(j, i) * Rational(pow(factorial(d_ + 1 - j), static_cast<unsigned long>(k)));
  return acc;
}

std::vector<Rational> GrowthExpansion::evaluate(int k) const {
  std::vector<Rational> out{Rational(1)};
  for (int i = 0; i <= d_; ++i) out.push_back(evaluate(i, k));
  return out;
}

}  // namespace primeplex
