#include "primeplex/complex/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "primeplex/errors.hpp"

namespace primeplex {

namespace {

struct CanonicalLess {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

constexpr std::size_t kMaxFaceVertices = 24;

template <class Fn>
void for_each_subset(const Simplex& s, Fn&& fn) {
  const std::size_t n = s.size();
  Simplex sub;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    sub.clear();
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::uint64_t{1} << b)) sub.push_back(s[b]);
    fn(sub, mask);
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> canonical)
    : labels_(std::move(labels)), simplices_(std::move(canonical)) {
  for (std::size_t i = 0; i < simplices_.size(); ++i) index_.emplace(simplices_[i], i);
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> labels, const std::vector<Simplex>& faces,
                                                std::size_t max_simplices) {
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    throw std::invalid_argument("SimplicialComplex: vertex labels must be distinct");
  std::set<Simplex, CanonicalLess> all;
  all.insert(Simplex{});
  for (VertexId v = 0; v < labels.size(); ++v) all.insert(Simplex{v});
  for (Simplex face : faces) {
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
      throw std::invalid_argument("SimplicialComplex: repeated vertex in face");
    if (!face.empty() && face.back() >= labels.size())
      throw std::invalid_argument("SimplicialComplex: face uses an unlabelled vertex");
    if (face.size() > kMaxFaceVertices) throw ResourceError("SimplicialComplex: face too large to close");
    if (all.contains(face)) continue;
    for_each_subset(face, [&](const Simplex& sub, std::uint64_t) { all.insert(sub); });
    if (all.size() > max_simplices)
      throw ResourceError("SimplicialComplex: closure exceeds " + std::to_string(max_simplices) + " simplices");
  }
  return SimplicialComplex(std::move(labels), std::vector<Simplex>(all.begin(), all.end()));
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (auto it = index_.find(s); it != index_.end()) return it->second;
  return std::nullopt;
}

std::string SimplicialComplex::label(const Simplex& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += labels_.at(s[i]);
  }
  return out + "}";
}

std::vector<std::string> SimplicialComplex::labelled_simplices() const {
  std::vector<std::string> out;
  out.reserve(simplices_.size());
  for (const auto& s : simplices_) out.push_back(label(s));
  return out;
}

bool SimplicialComplex::is_closed() const {
  if (simplices_.empty() || !simplices_.front().empty()) return false;
  for (const auto& s : simplices_) {
    if (s.size() > kMaxFaceVertices) return false;
    bool ok = true;
    for_each_subset(s, [&](const Simplex& sub, std::uint64_t) { ok = ok && contains(sub); });
    if (!ok) return false;
  }
  return true;
}

SimplicialComplex explicit_complex(std::uint64_t n, std::uint64_t bound) {
  if (n < 1) throw std::invalid_argument("explicit_complex: n must be >= 1");
  if (n > bound)
    throw ResourceError("explicit_complex: n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));

  std::vector<std::string> labels;
  std::vector<VertexId> id_of(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Simplex> simplices;
  for (std::uint64_t k = 1; k <= n; ++k) {
    Simplex s;
    std::uint64_t rest = k;
    bool squarefree = true;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
      if (rest % p) continue;
      rest /= p;
      if (rest % p == 0) {
        squarefree = false;
        break;
      }
      s.push_back(id_of[p]);
    }
    if (!squarefree) continue;
    if (rest > 1) {
      if (rest == k) {
        // k is prime: new vertex, ids increase with the prime
        id_of[k] = static_cast<VertexId>(labels.size());
        labels.push_back(std::to_string(k));
      }
      s.push_back(id_of[rest]);
    }
    simplices.push_back(std::move(s));
  }
  std::sort(simplices.begin(), simplices.end(), CanonicalLess{});
  return SimplicialComplex(std::move(labels), std::move(simplices));
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& k, std::size_t max_simplices) {
  const auto& simplices = k.simplices();
  if (simplices.empty()) throw std::invalid_argument("barycentric_subdivide: empty family");

  // New vertex v corresponds to simplices[v + 1]; ids respect (size, lex)
  // order, so every chain listed bottom-up is already increasing.
  std::vector<std::string> labels;
  labels.reserve(simplices.size() - 1);
  for (std::size_t i = 1; i < simplices.size(); ++i) labels.push_back(k.label(simplices[i]));

  std::vector<std::vector<Simplex>> chains_to(simplices.size());
  std::size_t total = 1;
  for (std::size_t top = 1; top < simplices.size(); ++top) {
    const Simplex& sigma = simplices[top];
    if (sigma.size() > kMaxFaceVertices) throw ResourceError("barycentric_subdivide: simplex too large");
    const auto own = static_cast<VertexId>(top - 1);
    auto& out = chains_to[top];
    out.push_back(Simplex{own});
    const std::uint64_t full = (std::uint64_t{1} << sigma.size()) - 1;
    for_each_subset(sigma, [&](const Simplex& face, std::uint64_t mask) {
      if (mask == 0 || mask == full) return;
      const auto idx = k.index_of(face);
      if (!idx) throw std::invalid_argument("barycentric_subdivide: input is not closed under faces");
      for (const Simplex& c : chains_to[*idx]) {
        Simplex extended = c;
        extended.push_back(own);
        out.push_back(std::move(extended));
      }
    });
    total += out.size();
    if (total > max_simplices)
      throw ResourceError("barycentric_subdivide: output exceeds " + std::to_string(max_simplices) + " simplices");
  }

  std::vector<Simplex> result;
  result.reserve(total);
  result.push_back(Simplex{});
  for (auto& chains : chains_to)
    for (auto& c : chains) result.push_back(std::move(c));
  std::sort(result.begin(), result.end(), CanonicalLess{});
  return SimplicialComplex(std::move(labels), std::move(result));
}

FVector f_vector(const SimplicialComplex& k) {
  std::vector<Integer> counts(static_cast<std::size_t>(k.dim()) + 2, Integer(0));
  for (const auto& s : k.simplices()) counts[s.size()] += 1;
  return FVector(std::move(counts));
}

Integer euler_char(const SimplicialComplex& k) {
  Integer chi = 0;
  for (const auto& s : k.simplices()) {
    if (s.size() % 2 == 1) chi += 1; else chi -= 1;
  }
  return chi;
}

}  // namespace primeplex
