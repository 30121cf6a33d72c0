#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "primeplex/complex/prime_complex.hpp"
#include "primeplex/errors.hpp"
#include "primeplex/exact/subdivision.hpp"
#include "primeplex/zeros/alpha.hpp"
#include "primeplex/zeros/growth.hpp"
#include "primeplex/zeros/trajectory.hpp"

using namespace primeplex;

namespace {

const SieveTable& sieve() {
  static const SieveTable s(20'000);
  return s;
}

FVector fv(std::initializer_list<long> counts) {
  std::vector<Integer> v;
  for (long c : counts) v.emplace_back(c);
  return FVector(std::move(v));
}

RationalPoly poly(std::initializer_list<long> descending) {
  std::vector<Rational> c;
  for (long x : descending) c.emplace_back(x);
  return RationalPoly(std::move(c));
}

double distance(const BigComplex& z, double re, double im = 0) {
  return std::hypot(z.re.to_double() - re, z.im.to_double() - im);
}

}  // namespace

TEST_CASE("subdivided face counts", "[growth]") {
  CHECK(subdivided_f(fv({1, 3, 1}), 0) == fv({1, 3, 1}));
  CHECK(subdivided_f(fv({1, 3, 1}), 1) == fv({1, 4, 2}));
  CHECK(subdivided_f(fv({1, 3, 1}), 2) == fv({1, 6, 4}));
  CHECK(subdivided_f(fv({1, 10, 7, 1}), 1) == fv({1, 18, 20, 6}));
  CHECK(subdivided_f(fv({1, 10, 7, 1}), 2) == fv({1, 44, 76, 36}));
  CHECK(subdivided_f(fv({1, 5}), 9) == fv({1, 5}));
  CHECK_THROWS_AS(subdivided_f(fv({1, 3, 1}), 65), ResourceError);
  CHECK_THROWS_AS(subdivided_f(fv({1, 3, 1}), 3, 2), ResourceError);
  CHECK_THROWS_AS(subdivided_f(fv({1, 3, 1}), -1), std::invalid_argument);
}

TEST_CASE("growth expansion coefficients", "[growth]") {
  const GrowthExpansion g6(fv({1, 3, 1}));
  // f_1^(k) = 2^k, f_0^(k) = 2^k + 2
  CHECK(g6.coefficient(0, 1) == 1);
  CHECK(g6.coefficient(0, 0) == 1);
  CHECK(g6.coefficient(1, 0) == 2);

  const GrowthExpansion g30(fv({1, 10, 7, 1}));
  CHECK(g30.coefficient(0, 2) == 1);
  // leading coefficients are f_d times the limiting eigenvector
  const EigenRationals e = eigen_rationals(2);
  for (int i = 0; i <= 2; ++i) CHECK(g30.coefficient(0, i) == e[i]);
}

TEST_CASE("growth expansion reproduces exact counts", "[growth][property]") {
  for (std::uint64_t n : {6, 30, 94, 210, 2310, 9699}) {
    const FVector base = summary(sieve(), n).f_vector;
    const GrowthExpansion g(base);
    for (int k = 0; k <= 20; ++k) {
      const FVector exact = subdivided_f(base, k);
      const auto closed = g.evaluate(k);
      REQUIRE(closed.size() == exact.counts().size());
      for (std::size_t i = 0; i < closed.size(); ++i) REQUIRE(closed[i] == Rational(exact.counts()[i]));
    }
    // C_{0,i} = f_d F_{i,d}
    const int d = g.dim();
    const EigenRationals e = eigen_rationals(d);
    for (int i = 0; i <= d; ++i) CHECK(g.coefficient(0, i) == Rational(base[d]) * e[i]);
  }
}

TEST_CASE("roots of quadratics", "[roots]") {
  const mpfr_prec_t bits = 200;
  // z^2 + b z + c, roots (-b +- sqrt(b^2 - 4c)) / 2
  for (auto [b, c] : {std::pair{1L, -1L}, std::pair{2L, -1L}, std::pair{-3L, 2L}}) {
    const auto rs = find_roots(poly({1, b, c}), bits);
    REQUIRE(rs.roots.size() == 2);
    const BigFloat disc = sqrt(BigFloat(b * b - 4 * c, bits));
    const BigFloat r1 = (BigFloat(-b, bits) - disc) / BigFloat(2L, bits);
    const BigFloat r2 = (BigFloat(-b, bits) + disc) / BigFloat(2L, bits);
    const BigFloat tol = exp2i(-(bits / 2), bits);
    bool hit1 = false, hit2 = false;
    for (const auto& r : rs.roots) {
      CHECK(r.real_certified);
      CHECK(r.value.im.is_zero());
      hit1 = hit1 || abs(r.value.re - r1) < tol;
      hit2 = hit2 || abs(r.value.re - r2) < tol;
    }
    CHECK(hit1);
    CHECK(hit2);
    CHECK(abs(rs.roots[0].value) <= abs(rs.roots[1].value));
  }
}

TEST_CASE("roots edge cases", "[roots]") {
  const auto z = find_roots(poly({1, 0}), 64);
  REQUIRE(z.roots.size() == 1);
  CHECK(z.roots[0].value.re.is_zero());
  CHECK(z.roots[0].real_certified);

  const auto twice = find_roots(poly({1, 0, 0, 1}), 128);  // z^3 + 1
  CHECK(twice.roots.size() == 3);
  int certified = 0;
  for (const auto& r : twice.roots) certified += r.real_certified;
  CHECK(certified == 1);

  const auto complex_pair = find_roots(poly({1, 0, 1}), 128);
  for (const auto& r : complex_pair.roots) {
    CHECK_FALSE(r.real_certified);
    CHECK(distance(r.value, 0, r.value.im.to_double() > 0 ? 1 : -1) < 1e-30);
  }

  // non-monic input gives the same roots
  const auto scaled = find_roots(poly({3, 3, -3}), 128);
  CHECK(distance(scaled.roots[0].value, (std::sqrt(5.0) - 1) / 2) < 1e-15);

  CHECK_THROWS_AS(find_roots(poly({5}), 64), std::invalid_argument);
  CHECK_THROWS_AS(find_roots(poly({1, 1}), 8), std::invalid_argument);
}

TEST_CASE("working precision", "[trajectory]") {
  CHECK(working_precision(1, 0, 128) == 128);
  CHECK(working_precision(2, 12, 64) == 64 + static_cast<mpfr_prec_t>(std::ceil(12 * std::log2(6.0))));
  CHECK(working_precision(2, 12, 128) == 128);
  CHECK(working_precision(2, 12, 512) == 512);
  CHECK(working_precision(5, 40, 64) > 64 + 40 * 9);
}

TEST_CASE("trajectory of the one-dimensional complex on 6", "[trajectory]") {
  const auto t = trajectory(sieve(), 6, 16, 128);
  REQUIRE(t.entries.size() == 17);
  CHECK(t.dim() == 1);
  CHECK(t.entries[0].h.to_string() == "z^2 + z - 1");
  CHECK(t.entries[1].h.to_string() == "z^2 + 2z - 1");
  for (const auto& e : t.entries) {
    CHECK(e.roots.roots.size() == 2);
    CHECK(e.interior.empty());
    CHECK_FALSE(e.ambiguous);
    CHECK(e.rho_inf_certified_real);
    const auto id = identity_checks(e);
    CHECK(id.product_error < 1e-30);
    CHECK(id.sum_error < 1e-30);
  }
  // h_k = z^2 + 2^k z - 1 for k >= 1: rho_inf = -2^{k-1} - sqrt(4^{k-1} + 1)
  for (int k = 1; k <= 16; ++k) {
    const double half = std::ldexp(1.0, k - 1);
    CHECK(t.entries[static_cast<std::size_t>(k)].rho_inf.re.to_double() ==
          Catch::Approx(-half - std::sqrt(half * half + 1)).epsilon(1e-14));
  }
  const auto& last = t.entries.back();
  CHECK(distance(last.ratio_inf, 1) < 1e-8);
  CHECK(std::abs(last.scaled_rho0.to_double() - 1) < 1e-8);
}

TEST_CASE("trajectory of the two-dimensional complex on 30", "[trajectory]") {
  const auto t = trajectory(sieve(), 30, 12, 512);
  REQUIRE(t.entries.size() == 13);
  CHECK(t.entries[1].h.to_string() == "z^3 + 15z^2 - 13z + 3");
  CHECK(t.entries[1].ambiguous);
  const auto& e = t.entries[12];
  CHECK(e.rho_inf_certified_real);
  CHECK(distance(e.ratio_inf, 1) < 1e-4);
  CHECK(std::abs(e.scaled_rho0.to_double() - 6) < 1e-3);
  REQUIRE(e.interior.size() == 1);
  CHECK(distance(e.interior_product, e.interior[0].re.to_double(), e.interior[0].im.to_double()) < 1e-30);
  for (const auto& entry : t.entries) {
    const auto id = identity_checks(entry);
    CHECK(id.product_error < 1e-100);
    CHECK(id.sum_error < 1e-100);
  }

  // The interior root approaches -1 at rate (2!/3!)^k.
  const double d12 = distance(e.interior[0], -1);
  CHECK(d12 == Catch::Approx(4.1403e-5).epsilon(1e-3));
  const double d11 = distance(t.entries[11].interior[0], -1);
  CHECK(d12 / d11 == Catch::Approx(1.0 / 3).epsilon(1e-3));
}

TEST_CASE("interior root is within 1e-6 of -1 from k = 16", "[trajectory]") {
  const auto t = trajectory(fv({1, 10, 7, 1}), 16, 512);
  CHECK(distance(t.entries[15].interior[0], -1) > 1e-6);
  CHECK(distance(t.entries[16].interior[0], -1) == Catch::Approx(5.1108e-7).epsilon(1e-3));
}

TEST_CASE("Vieta sums on the first subdivision", "[trajectory]") {
  // sum of roots = (d+1) - f_0
  const auto t6 = trajectory(fv({1, 3, 1}), 1, 128);
  BigComplex s(128);
  for (const auto& r : t6.entries[1].roots.roots) s = s + r.value;
  CHECK(distance(s, -2) < 1e-30);
  const auto t30 = trajectory(fv({1, 10, 7, 1}), 1, 256);
  BigComplex s30(256);
  for (const auto& r : t30.entries[1].roots.roots) s30 = s30 + r.value;
  CHECK(distance(s30, -15) < 1e-30);
}

TEST_CASE("trajectory argument checks", "[trajectory]") {
  CHECK_THROWS_AS(trajectory(sieve(), 5, 4, 128), std::invalid_argument);
  CHECK_THROWS_AS(trajectory(sieve(), 1, 4, 128), std::invalid_argument);
  CHECK_THROWS_AS(trajectory(sieve(), 6, 65, 128), std::invalid_argument);
  CHECK_THROWS_AS(trajectory(sieve(), 20'001, 1, 128), std::out_of_range);
}

TEST_CASE("alpha values", "[alpha]") {
  CHECK(alpha(sieve(), 6).alpha == 1);
  CHECK(alpha(sieve(), 30).alpha == 6);
  CHECK(alpha(sieve(), 22).alpha == Rational(1, 6));
  CHECK(alpha(sieve(), 219).alpha == -22);
  const auto a215 = alpha(sieve(), 215);
  CHECK(a215.alpha == Rational(-11, 2));
  REQUIRE(a215.exponent);
  CHECK(*a215.exponent == Catch::Approx(std::log(5.5) / std::log(24.0)));
  const auto a39 = alpha(sieve(), 39);
  CHECK(a39.alpha == 0);
  CHECK_FALSE(a39.exponent);
  CHECK_THROWS_AS(alpha(sieve(), 5), std::invalid_argument);
  CHECK_THROWS_AS(alpha(sieve(), 1), std::invalid_argument);
}

TEST_CASE("alpha is exact", "[alpha][property]") {
  for (std::uint64_t n = 6; n <= 10'000; ++n) {
    const auto s = summary(sieve(), n);
    if (s.dim < 1) continue;
    const auto a = alpha(s);
    REQUIRE(a.h1 == limit_coefficients(s.dim)[1]);
    REQUIRE(a.alpha * a.h1 * Rational(a.f_top) == Rational(s.euler_char));
    REQUIRE(a.f_top == s.f_vector[s.dim]);
  }
}

TEST_CASE("alpha matches the trajectory asymptotics", "[alpha][trajectory]") {
  // |rho_0| (d+1)!^k tends to |alpha|
  for (std::uint64_t n : {6, 30}) {
    const auto a = alpha(sieve(), n);
    const auto t = trajectory(sieve(), n, 10, 256);
    const double scaled = t.entries.back().scaled_rho0.to_double();
    CHECK(scaled == Catch::Approx(std::abs(a.alpha.get_d())).epsilon(1e-3));
  }
}

TEST_CASE("conjecture report", "[alpha]") {
  const auto rows = conjecture_report(sieve(), 250);
  REQUIRE_FALSE(rows.empty());
  CHECK(rows.front().record.n == 6);
  for (const auto& row : rows) {
    CHECK(row.record.dim >= 1);
    if (row.within_three_halves) CHECK(row.within_square);
  }
  const auto at = [&](std::uint64_t n) {
    for (const auto& row : rows)
      if (row.record.n == n) return row;
    FAIL("missing row " << n);
    return rows.front();
  };
  CHECK(at(30).record.exponent.value() == Catch::Approx(1.0));
  CHECK(at(30).within_three_halves);
  CHECK_FALSE(at(39).record.exponent);
  CHECK(at(39).within_three_halves);
  CHECK(at(7).record.alpha * at(7).record.alpha <= 4);
  CHECK(at(7).within_square);
}
