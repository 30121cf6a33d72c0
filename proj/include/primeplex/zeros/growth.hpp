#pragma once

#include <vector>

#include "primeplex/complex/fvector.hpp"
#include "primeplex/exact/number.hpp"

namespace primeplex {

inline constexpr int kDefaultMaxSubdivisions = 64;

/// Face counts of the k-th barycentric subdivision, F_d^k fv, exactly.
/// Throws ResourceError when k > max_k.
FVector subdivided_f(const FVector& fv, int k, int max_k = kDefaultMaxSubdivisions);

/// f_i^{(k)} = sum_{j=0}^{d-i} C_{j,i} (d+1-j)!^k for 0 <= i <= d.
class GrowthExpansion {
 public:
  /// Solves for C_{.,i} from the exact counts at k = 0..d-i.
  explicit GrowthExpansion(const FVector& fv);

  int dim() const { return d_; }
  /// C_{j,i}, 0 <= i <= d, 0 <= j <= d-i.
  const Rational& coefficient(int j, int i) const;
  /// f_i^{(k)} from the closed form.
  Rational evaluate(int i, int k) const;
  /// (f_{-1}, ..., f_d) at k from the closed form; f_{-1} is 1.
  std::vector<Rational> evaluate(int k) const;

 private:
  int d_;
  std::vector<std::vector<Rational>> c_;  // c_[i][j]
};

inline GrowthExpansion growth_expansion(const FVector& fv) { return GrowthExpansion(fv); }

}  // namespace primeplex
