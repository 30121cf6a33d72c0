#include "primeplex/complex/fvector.hpp"

#include <sstream>
#include <stdexcept>

namespace primeplex {

FVector::FVector(std::vector<Integer> counts) : counts_(std::move(counts)) {
  if (counts_.empty() || counts_.front() != 1) throw std::invalid_argument("FVector: f_{-1} must be 1");
  if (counts_.size() > 1 && counts_.back() < 1) throw std::invalid_argument("FVector: top face count must be >= 1");
  for (const auto& c : counts_)
    if (c < 0) throw std::invalid_argument("FVector: negative face count");
}

const Integer& FVector::operator[](int i) const {
  if (i < -1 || i > dim()) throw std::out_of_range("FVector index out of range");
  return counts_[static_cast<std::size_t>(i + 1)];
}

Integer FVector::reduced_euler_characteristic() const {
  Integer chi = 0;
  for (int i = -1; i <= dim(); ++i) {
    if (i % 2 == 0) chi += (*this)[i]; else chi -= (*this)[i];
  }
  return chi;
}

RationalPoly FVector::f_polynomial() const {
  std::vector<Rational> c;
  c.reserve(counts_.size());
  for (const auto& f : counts_) c.emplace_back(f);
  return RationalPoly(std::move(c));
}

std::string FVector::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) out << (i ? "," : "") << counts_[i].get_str();
  out << ")";
  return out.str();
}

RationalPoly h_poly(const FVector& fv) { return poly_shift(fv.f_polynomial()); }

}  // namespace primeplex
