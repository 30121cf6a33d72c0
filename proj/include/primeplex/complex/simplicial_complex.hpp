#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "primeplex/complex/fvector.hpp"
#include "primeplex/exact/number.hpp"

namespace primeplex {

using VertexId = std::uint32_t;
/// Strictly increasing vertex ids.
using Simplex = std::vector<VertexId>;

inline constexpr std::size_t kDefaultSimplexBound = 5'000'000;
inline constexpr std::uint64_t kExplicitComplexBound = 10'000;

/// Finite abstract simplicial complex with labelled vertices. Simplices are
/// kept in canonical order (by size, then lexicographically by vertex id),
/// starting with the empty simplex.
class SimplicialComplex {
 public:
  /// Downward closure of faces, plus the empty simplex and every vertex in
  /// labels. Labels must be distinct. Throws ResourceError when the closure
  /// has more than max_simplices elements.
  static SimplicialComplex from_faces(std::vector<std::string> labels, const std::vector<Simplex>& faces,
                                      std::size_t max_simplices = kDefaultSimplexBound);

  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  int dim() const { return static_cast<int>(simplices_.back().size()) - 1; }

  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// "{2,3}" with vertices in id order; "{}" for the empty simplex.
  std::string label(const Simplex& s) const;
  /// Every simplex rendered with label(), in canonical order.
  std::vector<std::string> labelled_simplices() const;

  /// Every face of every simplex is present.
  bool is_closed() const;

 private:
  friend SimplicialComplex explicit_complex(std::uint64_t, std::uint64_t);
  friend SimplicialComplex barycentric_subdivide(const SimplicialComplex&, std::size_t);

  SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> canonical);

  std::vector<std::string> labels_;
  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> index_;
};

/// Delta_n: the prime sets P(k) of all squarefree 1 <= k <= n, vertices
/// labelled by the primes. Factorisation is by trial division, independent
/// of the sieve. Throws ResourceError for n > bound.
SimplicialComplex explicit_complex(std::uint64_t n, std::uint64_t bound = kExplicitComplexBound);

/// K': vertices are the nonempty simplices of K (labelled by label()),
/// simplices are the chains sigma_0 < sigma_1 < ... < sigma_m of proper
/// inclusions, plus the empty set. Throws ResourceError if the output would
/// exceed max_simplices.
SimplicialComplex barycentric_subdivide(const SimplicialComplex& k, std::size_t max_simplices = kDefaultSimplexBound);

FVector f_vector(const SimplicialComplex& k);

/// sum over simplices of (-1)^{#sigma - 1}, counted directly.
Integer euler_char(const SimplicialComplex& k);

}  // namespace primeplex
