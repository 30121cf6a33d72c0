#include "primeplex/verify/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "primeplex/complex/prime_complex.hpp"
#include "primeplex/errors.hpp"
#include "primeplex/exact/combinatorics.hpp"
#include "primeplex/exact/determinant.hpp"
#include "primeplex/exact/subdivision.hpp"
#include "primeplex/zeros/alpha.hpp"
#include "primeplex/zeros/growth.hpp"
#include "primeplex/zeros/trajectory.hpp"

namespace primeplex::verify {

namespace {

using Check = std::function<CheckResult()>;

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

CheckResult ok(std::string name, std::string note = {}) { return {std::move(name), true, std::move(note)}; }
CheckResult fail(std::string name, std::string witness) { return {std::move(name), false, std::move(witness)}; }

// ---- core ----------------------------------------------------------------

CheckResult stirling_vs_recurrence() {
  const std::string name = "subdivision counts: Stirling formula = recurrence (d <= 12)";
  for (int d = -1; d <= 12; ++d)
    for (int i = -1; i <= d; ++i)
      if (subdivision_count(i, d) != subdivision_count_recurrence(i, d))
        return fail(name, "i=" + std::to_string(i) + " d=" + std::to_string(d));
  return ok(name);
}

CheckResult eigenvector_identity() {
  const std::string name = "transfer matrix eigenvector for (d+1)! (d <= 10)";
  for (int d = 0; d <= 10; ++d) {
    const auto v = eigen_rationals(d);
    const auto image = apply<Integer, Rational>(transfer_matrix(d), v.values());
    const Rational lambda(factorial(d + 1));
    for (int i = -1; i <= d; ++i)
      if (image[static_cast<std::size_t>(i + 1)] != lambda * v[i])
        return fail(name, "d=" + std::to_string(d) + " row " + std::to_string(i));
  }
  return ok(name);
}

CheckResult chain_sum_agrees() {
  const std::string name = "eigenvector entries: chain sum = recurrence (d <= 10)";
  for (int d = 1; d <= 10; ++d)
    for (int i = 0; i < d; ++i)
      if (eigen_rationals_direct(d, i) != eigen_rationals(d)[i])
        return fail(name, "d=" + std::to_string(d) + " i=" + std::to_string(i));
  return ok(name);
}

CheckResult shift_inverse() {
  const std::string name = "shift matrix times its inverse is the identity (d <= 10)";
  for (int d = 0; d <= 10; ++d)
    if (shift_matrix(d) * shift_matrix_inverse(d) != ShiftMatrix::identity(d)) return fail(name, "d=" + std::to_string(d));
  return ok(name);
}

CheckResult similarity() {
  const std::string name = "S F S^-1 = H (d <= 10)";
  for (int d = 0; d <= 10; ++d)
    if (shift_matrix(d) * transfer_matrix(d) * shift_matrix_inverse(d) != descent_matrix(d))
      return fail(name, "d=" + std::to_string(d));
  return ok(name);
}

CheckResult descent_bruteforce() {
  const std::string name = "descent matrix: recurrence = permutation count (d <= 5)";
  for (int d = 0; d <= kDescentBruteForceBound; ++d)
    if (descent_matrix(d) != descent_matrix_bruteforce(d)) return fail(name, "d=" + std::to_string(d));
  return ok(name);
}

CheckResult rotational_symmetry() {
  const std::string name = "descent matrix rotational symmetry (d <= 10)";
  for (int d = 0; d <= 10; ++d) {
    const auto h = descent_matrix(d);
    for (int i = -1; i <= d; ++i)
      for (int j = -1; j <= d; ++j)
        if (h(i, j) != h(d - 1 - i, d - 1 - j))
          return fail(name, "d=" + std::to_string(d) + " (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return ok(name);
}

CheckResult limit_polynomial_shape() {
  const std::string name = "limit h-polynomial: palindromic, positive interior, sum 1 (1 <= d <= 12)";
  for (int d = 1; d <= 12; ++d) {
    const auto c = limit_coefficients(d);
    const std::string at = "d=" + std::to_string(d);
    if (c.front() != 0 || c.back() != 0) return fail(name, at + ": nonzero end coefficient");
    Rational sum = 0;
    for (int i = 0; i <= d + 1; ++i) {
      const auto& ci = c[static_cast<std::size_t>(i)];
      if (ci != c[static_cast<std::size_t>(d + 1 - i)]) return fail(name, at + " i=" + std::to_string(i) + ": not palindromic");
      if (i >= 1 && i <= d && ci <= 0) return fail(name, at + " i=" + std::to_string(i) + ": not positive");
      sum += ci;
    }
    if (sum != 1) return fail(name, at + ": sum " + to_string(sum));
  }
  return ok(name);
}

CheckResult limit_vector_eigen() {
  const std::string name = "descent matrix eigenvector from limit coefficients (d <= 10)";
  for (int d = 0; d <= 10; ++d) {
    const auto c = limit_coefficients(d);
    const auto image = apply<Integer, Rational>(descent_matrix(d), std::span<const Rational>(c));
    const Rational lambda(factorial(d + 1));
    for (std::size_t i = 0; i < c.size(); ++i)
      if (image[i] != lambda * c[i]) return fail(name, "d=" + std::to_string(d));
  }
  return ok(name);
}

CheckResult h1_bounds() {
  const std::string name = "sqrt(2)^d/((d+1)! d) <= H_1 <= 2^(d+1)/(d+1)! (1 <= d <= 12)";
  for (int d = 1; d <= 12; ++d) {
    const Rational h1 = limit_coefficients(d)[1];
    const Integer top = factorial(d + 1);
    const Rational upper = Rational(pow(Integer(2), static_cast<unsigned long>(d + 1))) / Rational(top);
    // lower bound squared: 2^d / ((d+1)!^2 d^2)
    const Rational lower_sq = Rational(pow(Integer(2), static_cast<unsigned long>(d))) / Rational(top * top * d * d);
    if (h1 > upper) return fail(name, "d=" + std::to_string(d) + ": above upper bound");
    if (h1 * h1 < lower_sq) return fail(name, "d=" + std::to_string(d) + ": below lower bound");
  }
  return ok(name);
}

CheckResult first_row_powers() {
  const std::string name = "descent matrix row 0 is 2^(d-j) for 0 <= j <= d (1 <= d <= 10)";
  for (int d = 1; d <= 10; ++d) {
    const auto h = descent_matrix(d);
    for (int j = 0; j <= d; ++j)
      if (h(0, j) != pow(Integer(2), static_cast<unsigned long>(d - j)))
        return fail(name, "d=" + std::to_string(d) + " j=" + std::to_string(j));
  }
  return ok(name);
}

// ---- complex -------------------------------------------------------------

CheckResult mertens_identity(const SieveTable& sieve) {
  const std::string name = "alternating face count = -M(n) (n <= 10^5)";
  std::uint64_t checked = 0;
  try {
    for_each_summary(sieve, 1, kRequiredSieveLimit, [&](const ComplexSummary& s) {
      if (s.f_vector.reduced_euler_characteristic() != -Integer(static_cast<long>(s.mertens)))
        throw InconsistencyError("n=" + std::to_string(s.n));
      ++checked;
    });
  } catch (const InconsistencyError& e) {
    return fail(name, e.what());
  }
  return ok(name, std::to_string(checked) + " values");
}

CheckResult first_negative(const SieveTable& sieve) {
  const std::string name = "least n >= 2 with negative reduced Euler characteristic is 94";
  std::uint64_t found = 0;
  for_each_summary(sieve, 2, 1000, [&](const ComplexSummary& s) {
    if (!found && s.euler_char < 0) found = s.n;
  });
  if (found != 94) return fail(name, "found " + std::to_string(found));
  return ok(name);
}

CheckResult explicit_matches_counts(const SieveTable& sieve) {
  const std::string name = "explicit complexes match weight counts (n <= 10^4)";
  const auto explicit_f = explicit_f_vectors(kExplicitComplexBound);
  std::string witness;
  for_each_summary(sieve, 1, kExplicitComplexBound, [&](const ComplexSummary& s) {
    const auto& f = explicit_f[static_cast<std::size_t>(s.n)];
    if (witness.empty() && (f != s.f_vector || f.dim() != dim_of(s.n))) witness = "n=" + std::to_string(s.n);
  });
  return witness.empty() ? ok(name) : fail(name, witness);
}

CheckResult subdivision_matches_transfer() {
  const std::string name = "explicit subdivision f-vector = transfer matrix image (Delta_6, Delta_30, k <= 2)";
  for (std::uint64_t n : {6, 30}) {
    SimplicialComplex k = explicit_complex(n);
    const FVector base = f_vector(k);
    for (int step = 1; step <= 2; ++step) {
      k = barycentric_subdivide(k);
      if (f_vector(k) != subdivided_f(base, step))
        return fail(name, "n=" + std::to_string(n) + " k=" + std::to_string(step) + ": " + f_vector(k).to_string());
    }
  }
  return ok(name);
}

CheckResult random_subdivisions() {
  const std::string name = "subdivision keeps Euler characteristic and dimension (50 random complexes)";
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 50; ++t) {
    const auto k = random_complex(rng, 1000);
    const auto s = barycentric_subdivide(k);
    if (euler_char(s) != euler_char(k) || s.dim() != k.dim() || f_vector(s) != subdivided_f(f_vector(k), 1))
      return fail(name, "instance " + std::to_string(t) + " f=" + f_vector(k).to_string());
  }
  return ok(name);
}

// ---- zeros ---------------------------------------------------------------

CheckResult euler_preserved(const SieveTable& sieve) {
  const std::string name = "Euler characteristic constant along subdivisions (Delta_6, 30, 210; k <= 20)";
  for (std::uint64_t n : {6, 30, 210}) {
    const FVector fv = summary(sieve, n).f_vector;
    for (int k = 0; k <= 20; ++k)
      if (subdivided_f(fv, k).reduced_euler_characteristic() != fv.reduced_euler_characteristic())
        return fail(name, fv.to_string() + " k=" + std::to_string(k));
  }
  return ok(name);
}

CheckResult growth_closed_form(const SieveTable& sieve) {
  const std::string name = "growth expansion: leading terms and exact reproduction (Delta_6, 30, 210; k <= 20)";
  for (std::uint64_t n : {6, 30, 210}) {
    const FVector fv = summary(sieve, n).f_vector;
    const GrowthExpansion g(fv);
    const int d = fv.dim();
    const auto f = eigen_rationals(d);
    for (int i = 0; i <= d; ++i)
      if (g.coefficient(0, i) != Rational(fv[d]) * f[i]) return fail(name, "n=" + std::to_string(n) + " C_0," + std::to_string(i));
    for (int k = 0; k <= 20; ++k) {
      const FVector exact = subdivided_f(fv, k);
      for (int i = 0; i <= d; ++i)
        if (g.evaluate(i, k) != Rational(exact[i])) return fail(name, "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return ok(name);
}

std::vector<CheckResult> trajectory_checks(const SieveTable& sieve) {
  std::vector<CheckResult> out;
  const auto t6 = trajectory(sieve, 6, 16, 128);
  const auto t30 = trajectory(sieve, 30, 12, 512);

  {
    const std::string name = "Delta_6: |ratio_inf - 1| and |scaled_rho0 - 1| <= 8 * 2^-k (4 <= k <= 16)";
    std::string witness;
    for (const auto& e : t6.entries) {
      if (e.k < 4) continue;
      const double tol = 8.0 * std::ldexp(1.0, -e.k);
      const double r = std::hypot(e.ratio_inf.re.to_double() - 1, e.ratio_inf.im.to_double());
      const double s = std::fabs(e.scaled_rho0.to_double() - 1);
      if (witness.empty() && (r > tol || s > tol)) witness = "k=" + std::to_string(e.k) + " " + sci(r) + " " + sci(s);
    }
    out.push_back(witness.empty() ? ok(name) : fail(name, witness));
  }
  const auto& e12 = t30.entries.back();
  {
    const std::string name = "Delta_30 at k=12: |ratio_inf - 1| <= 1e-3 and |scaled_rho0 - 6| <= 1e-2";
    const double r = std::hypot(e12.ratio_inf.re.to_double() - 1, e12.ratio_inf.im.to_double());
    const double s = std::fabs(e12.scaled_rho0.to_double() - 6);
    const std::string m = sci(r) + " " + sci(s);
    out.push_back(r <= 1e-3 && s <= 1e-2 ? ok(name, m) : fail(name, m));
  }
  {
    const std::string name = "Delta_30 at k=12: interior root within 1e-6 of -1";
    const BigComplex& z = e12.interior.front();
    const double dist = std::hypot(z.re.to_double() + 1, z.im.to_double());
    out.push_back(dist <= 1e-6 ? ok(name, sci(dist)) : fail(name, "distance " + sci(dist)));
  }
  {
    const std::string name = "Delta_30 at k=12: interior root product within 1e-6 of (-1)^(d-1)";
    const double dist = std::hypot(e12.interior_product.re.to_double() + 1, e12.interior_product.im.to_double());
    out.push_back(dist <= 1e-6 ? ok(name, sci(dist)) : fail(name, "distance " + sci(dist)));
  }
  {
    const std::string name = "rho_inf certified real for k >= 2";
    std::string witness;
    for (const auto* t : {&t6, &t30})
      for (const auto& e : t->entries)
        if (e.k >= 2 && !e.rho_inf_certified_real && witness.empty())
          witness = "d=" + std::to_string(t->dim()) + " k=" + std::to_string(e.k);
    out.push_back(witness.empty() ? ok(name) : fail(name, witness));
  }
  {
    const std::string name = "root product and sum identities, relative error <= 1e-9";
    std::string witness;
    double worst = 0;
    for (const auto* t : {&t6, &t30})
      for (const auto& e : t->entries) {
        const auto rep = identity_checks(e);
        worst = std::max({worst, rep.product_error, rep.sum_error});
        if (witness.empty() && (rep.product_error > 1e-9 || rep.sum_error > 1e-9))
          witness = "d=" + std::to_string(t->dim()) + " k=" + std::to_string(e.k);
      }
    out.push_back(witness.empty() ? ok(name, "max " + sci(worst)) : fail(name, witness));
  }
  return out;
}

CheckResult alpha_exactness(const SieveTable& sieve) {
  const std::string name = "alpha * H_1 * f_d = reduced Euler characteristic (n <= 10^4)";
  std::string witness;
  for_each_summary(sieve, 1, 10'000, [&](const ComplexSummary& s) {
    if (s.dim < 1 || !witness.empty()) return;
    const auto a = alpha(s);
    if (a.alpha * a.h1 * Rational(a.f_top) != Rational(s.euler_char)) witness = "n=" + std::to_string(s.n);
  });
  return witness.empty() ? ok(name) : fail(name, witness);
}

void require_sieve(const SieveTable& sieve) {
  if (sieve.limit() < kRequiredSieveLimit)
    throw std::invalid_argument("verify: sieve limit " + std::to_string(sieve.limit()) + " below " +
                                std::to_string(kRequiredSieveLimit));
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "core") return Suite::core;
  if (name == "complex") return Suite::complex;
  if (name == "zeros") return Suite::zeros;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::core: return "core";
    case Suite::complex: return "complex";
    case Suite::zeros: return "zeros";
    case Suite::all: return "all";
  }
  return "";
}

std::vector<Integer> monotone_chain(const DescentMatrix& h) {
  const int d = h.dimension();
  const int last_row = (d - 1) / 2;
  const int stop = d % 2 == 0 ? -1 : last_row;
  std::vector<Integer> chain;
  for (int i = 0; i <= last_row; ++i) {
    const int end = i == last_row ? stop : -1;
    for (int j = d; j >= end; --j) chain.push_back(h(i, j));
  }
  return chain;
}

CheckResult monotone_chain_check(int max_d) {
  const std::string name = "descent matrix monotone chain (1 <= d <= " + std::to_string(max_d) + ")";
  for (int d = 1; d <= max_d; ++d) {
    const auto chain = monotone_chain(descent_matrix(d));
    for (std::size_t p = 1; p < chain.size(); ++p)
      if (chain[p - 1] > chain[p]) return fail(name, "d=" + std::to_string(d) + " position " + std::to_string(p));
  }
  return ok(name);
}

Matrix<Rational> random_column_dominant(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(1, 50), den(1, 9);
  Matrix<Rational> m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational off = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      m(i, j) = Rational(num(rng), den(rng));
      m(i, j).canonicalize();
      off += m(i, j);
    }
    Rational slack(num(rng), den(rng));
    slack.canonicalize();
    m(j, j) = -(off + slack);
  }
  return m;
}

CheckResult determinant_sign_instances(int count, std::uint64_t seed) {
  const std::string name = std::to_string(count) + " random column-dominant determinants have sign (-1)^n";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_int_distribution<int> num(1, 50);
  for (int t = 0; t < count; ++t) {
    const std::size_t n = size(rng);
    const auto m = random_column_dominant(rng, n);
    const int expected = n % 2 == 0 ? 1 : -1;
    if (det_sign_check(m) != expected) return fail(name, "instance " + std::to_string(t) + " plain, n=" + std::to_string(n));
    std::vector<Rational> b(n);
    for (auto& x : b) x = num(rng);
    const std::size_t column = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    if (det_sign_check_replaced_column(m, column, b) != expected)
      return fail(name, "instance " + std::to_string(t) + " column " + std::to_string(column) + ", n=" + std::to_string(n));
  }
  return ok(name);
}

SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t max_simplices) {
  std::uniform_int_distribution<int> vertices(2, 8), faces(1, 6);
  for (;;) {
    const int nv = vertices(rng);
    std::vector<std::string> labels;
    for (int v = 0; v < nv; ++v) labels.push_back("v" + std::to_string(v));
    std::uniform_int_distribution<int> size(1, std::min(nv, 5));
    std::vector<Simplex> fs;
    for (int f = faces(rng); f > 0; --f) {
      std::vector<VertexId> all(static_cast<std::size_t>(nv));
      std::iota(all.begin(), all.end(), VertexId{0});
      std::shuffle(all.begin(), all.end(), rng);
      Simplex s(all.begin(), all.begin() + size(rng));
      std::sort(s.begin(), s.end());
      fs.push_back(std::move(s));
    }
    auto k = SimplicialComplex::from_faces(labels, fs);
    if (k.size() <= max_simplices) return k;
  }
}

std::vector<FVector> explicit_f_vectors(std::uint64_t limit) {
  const SimplicialComplex k = explicit_complex(limit, limit);
  std::vector<std::pair<std::uint64_t, std::size_t>> by_product;  // (product, size)
  for (const auto& s : k.simplices()) {
    std::uint64_t p = 1;
    for (VertexId v : s) p *= std::stoull(k.vertex_labels()[v]);
    by_product.emplace_back(p, s.size());
  }
  std::sort(by_product.begin(), by_product.end());
  std::vector<FVector> out{FVector({Integer(1)})};
  std::vector<Integer> counts;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    while (next < by_product.size() && by_product[next].first <= n) {
      const std::size_t size = by_product[next].second;
      if (counts.size() <= size) counts.resize(size + 1, Integer(0));
      counts[size] += 1;
      ++next;
    }
    out.emplace_back(counts);
  }
  return out;
}

std::vector<CheckResult> run_suite(Suite suite, const SieveTable& sieve) {
  std::vector<Check> checks;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::core) {
    checks.insert(checks.end(), {stirling_vs_recurrence, eigenvector_identity, chain_sum_agrees, shift_inverse, similarity,
                                 descent_bruteforce, rotational_symmetry, limit_polynomial_shape, limit_vector_eigen,
                                 h1_bounds, first_row_powers, [] { return monotone_chain_check(10); },
                                 [] { return determinant_sign_instances(100, 7); }});
  }
  if (all || suite == Suite::complex) {
    require_sieve(sieve);
    checks.insert(checks.end(), {[&] { return mertens_identity(sieve); }, [&] { return first_negative(sieve); },
                                 [&] { return explicit_matches_counts(sieve); }, subdivision_matches_transfer,
                                 random_subdivisions});
  }
  std::vector<CheckResult> out;
  for (const auto& c : checks) out.push_back(c());
  if (all || suite == Suite::zeros) {
    require_sieve(sieve);
    out.push_back(euler_preserved(sieve));
    out.push_back(growth_closed_form(sieve));
    for (auto& r : trajectory_checks(sieve)) out.push_back(std::move(r));
    out.push_back(alpha_exactness(sieve));
  }
  return out;
}

}  // namespace primeplex::verify
