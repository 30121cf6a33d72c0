#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles/oracles.hpp"
#include "primeplex/complex/prime_complex.hpp"
#include "primeplex/complex/simplicial_complex.hpp"
#include "primeplex/errors.hpp"
#include "primeplex/exact/subdivision.hpp"
#include "primeplex/verify/checks.hpp"
#include "primeplex/zeros/growth.hpp"

using namespace primeplex;

namespace {

const SieveTable& sieve() {
  static const SieveTable s(100'000);
  return s;
}

FVector fv(std::initializer_list<long> counts) {
  std::vector<Integer> v;
  for (long c : counts) v.emplace_back(c);
  return FVector(std::move(v));
}

FVector fv(const std::vector<long>& counts) { return FVector(std::vector<Integer>(counts.begin(), counts.end())); }

}  // namespace

TEST_CASE("Moebius values from the sieve", "[sieve]") {
  const SieveTable small = build_sieve(10);
  CHECK(small.moebius(6) == 1);
  CHECK(small.moebius(4) == 0);
  CHECK(small.moebius(1) == 1);
  CHECK(sieve().moebius(30) == -1);
  CHECK(small.smallest_prime_factor(9) == 3);
  CHECK(small.squarefree_weight(1) == 0);
  CHECK(small.squarefree_weight(8) == -1);
  CHECK_THROWS_AS(small.moebius(11), std::out_of_range);
  CHECK_THROWS_AS(small.moebius(0), std::invalid_argument);
  for (std::uint64_t k = 1; k <= 20'000; ++k) {
    CHECK(sieve().moebius(k) == oracle::moebius(k));
    if (oracle::moebius(k) != 0)
      CHECK(sieve().squarefree_weight(k) == static_cast<int>(oracle::prime_factors(k).size()));
  }
}

TEST_CASE("Mertens function", "[sieve]") {
  CHECK(sieve().mertens(1) == 1);
  CHECK(sieve().mertens(6) == -1);
  CHECK(sieve().mertens(94) == 1);
  CHECK_THROWS_AS(sieve().mertens(100'001), std::out_of_range);
  std::int64_t m = 0;
  for (std::uint64_t x = 1; x <= 20'000; ++x) {
    m += oracle::moebius(x);
    REQUIRE(sieve().mertens(x) == m);
  }
}

TEST_CASE("sieve memory budget", "[sieve]") {
  CHECK_THROWS_AS(SieveTable(1'000'000, 1'000), ResourceError);
  CHECK_THROWS_AS(SieveTable(0), std::invalid_argument);
  CHECK(SieveTable(1).mertens(1) == 1);
}

TEST_CASE("weight counts", "[sieve]") {
  CHECK(sieve().weight_count(2, 30) == 7);
  CHECK(sieve().weight_count(3, 30) == 1);
  CHECK(sieve().weight_count(1, 30) == 10);
  CHECK(sieve().weight_count(4, 209) == 0);
  CHECK(sieve().weight_count(4, 210) == 1);
}

TEST_CASE("dimension from primorials", "[complex]") {
  CHECK(dim_of(1) == -1);
  CHECK(dim_of(2) == 0);
  CHECK(dim_of(5) == 0);
  CHECK(dim_of(6) == 1);
  CHECK(dim_of(29) == 1);
  CHECK(dim_of(30) == 2);
  CHECK(dim_of(209) == 2);
  CHECK(dim_of(210) == 3);
  CHECK(dim_of(2309) == 3);
  CHECK(dim_of(2310) == 4);
  CHECK(dim_of(614889782588491409ull) == 13);
  CHECK(dim_of(614889782588491410ull) == 14);
  for (std::uint64_t n = 1; n <= 3000; ++n)
    CHECK(dim_of(n) == static_cast<int>(oracle::face_counts(n).size()) - 2);
}

TEST_CASE("complex summaries", "[complex]") {
  const auto s6 = summary(sieve(), 6);
  CHECK(s6.f_vector == fv({1, 3, 1}));
  CHECK(s6.euler_char == 1);
  CHECK(s6.dim == 1);
  const auto s30 = summary(sieve(), 30);
  CHECK(s30.f_vector == fv({1, 10, 7, 1}));
  CHECK(s30.euler_char == 3);
  const auto s1 = summary(sieve(), 1);
  CHECK(s1.f_vector == fv({1}));
  CHECK(s1.euler_char == -1);
  CHECK(s1.dim == -1);
  CHECK(s1.mertens == 1);
  CHECK_THROWS_AS(summary(sieve(), 100'001), std::out_of_range);

  for (std::uint64_t n = 1; n <= 1500; ++n) CHECK(summary(sieve(), n).f_vector == fv(oracle::face_counts(n)));
}

TEST_CASE("reduced Euler characteristic is minus the Mertens function", "[complex][property]") {
  std::int64_t m = 0;
  std::uint64_t first_negative = 0;
  for_each_summary(sieve(), 1, 100'000, [&](const ComplexSummary& s) {
    m += oracle::moebius(s.n);
    REQUIRE(s.euler_char == -m);
    REQUIRE(s.f_vector.reduced_euler_characteristic() == s.euler_char);
    REQUIRE(s.f_vector[s.dim] >= 1);
    if (s.n >= 2 && !first_negative && s.euler_char < 0) first_negative = s.n;
  });
  CHECK(first_negative == 94);
  CHECK(summary(sieve(), 94).euler_char == -1);
}

TEST_CASE("explicit complexes", "[complex]") {
  CHECK(explicit_complex(6).labelled_simplices() == std::vector<std::string>{"{}", "{2}", "{3}", "{5}", "{2,3}"});
  CHECK(explicit_complex(2).labelled_simplices() == std::vector<std::string>{"{}", "{2}"});
  CHECK(explicit_complex(1).labelled_simplices() == std::vector<std::string>{"{}"});
  const auto d30 = explicit_complex(30);
  CHECK(d30.contains(Simplex{0, 1, 2}));
  CHECK(d30.label(Simplex{0, 1, 2}) == "{2,3,5}");
  CHECK(d30.is_closed());
  CHECK_THROWS_AS(explicit_complex(10'001), ResourceError);
  CHECK_THROWS_AS(explicit_complex(0), std::invalid_argument);

  for (std::uint64_t n = 1; n <= 300; ++n) {
    const auto k = explicit_complex(n);
    CHECK(f_vector(k) == summary(sieve(), n).f_vector);
    CHECK(k.dim() == dim_of(n));
    CHECK(euler_char(k) == -sieve().mertens(n));
  }
}

TEST_CASE("explicit complexes match weight counts up to 10^4", "[complex][property]") {
  const auto explicit_f = verify::explicit_f_vectors(10'000);
  for_each_summary(sieve(), 1, 10'000, [&](const ComplexSummary& s) {
    REQUIRE(explicit_f[s.n] == s.f_vector);
    REQUIRE(explicit_f[s.n].dim() == dim_of(s.n));
  });
  for (std::uint64_t n : {2310, 5000, 9999, 10'000}) CHECK(f_vector(explicit_complex(n)) == summary(sieve(), n).f_vector);
}

TEST_CASE("barycentric subdivision", "[complex]") {
  const auto d6 = barycentric_subdivide(explicit_complex(6));
  CHECK(f_vector(d6) == fv({1, 4, 2}));
  CHECK(d6.vertex_labels() == std::vector<std::string>{"{2}", "{3}", "{5}", "{2,3}"});
  CHECK(d6.labelled_simplices() ==
        std::vector<std::string>{"{}", "{{2}}", "{{3}}", "{{5}}", "{{2,3}}", "{{2},{2,3}}", "{{3},{2,3}}"});

  const auto point = SimplicialComplex::from_faces({"v"}, {});
  const auto point2 = barycentric_subdivide(point);
  CHECK(f_vector(point2) == f_vector(point));
  CHECK(point2.size() == 2);

  auto d30 = barycentric_subdivide(explicit_complex(30));
  CHECK(f_vector(d30) == fv({1, 18, 20, 6}));
  d30 = barycentric_subdivide(d30);
  CHECK(f_vector(d30) == fv({1, 44, 76, 36}));
  CHECK(euler_char(d30) == 3);
  CHECK(d30.dim() == 2);
  CHECK(d30.is_closed());

  CHECK_THROWS_AS(barycentric_subdivide(explicit_complex(30), 10), ResourceError);
}

TEST_CASE("subdivision matches the transfer matrix", "[complex][property]") {
  for (std::uint64_t n : {6, 30, 210, 500}) {
    auto k = explicit_complex(n);
    const FVector base = f_vector(k);
    for (int step = 1; step <= 2; ++step) {
      k = barycentric_subdivide(k);
      CHECK(f_vector(k) == subdivided_f(base, step));
    }
  }
}

TEST_CASE("random complexes keep Euler characteristic and dimension", "[complex][property]") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 50; ++t) {
    const auto k = verify::random_complex(rng, 1000);
    REQUIRE(k.size() <= 1000);
    REQUIRE(k.is_closed());
    const auto s = barycentric_subdivide(k);
    INFO("f = " << f_vector(k).to_string());
    CHECK(euler_char(s) == euler_char(k));
    CHECK(s.dim() == k.dim());
    CHECK(f_vector(s) == FVector(apply<Integer, Integer>(transfer_matrix(k.dim()), f_vector(k).counts())));
    // h is monic with constant term (-1)^d chi
    const auto h = h_poly(f_vector(k));
    CHECK(h.is_monic());
    CHECK(h.constant_term() == (k.dim() % 2 ? -1 : 1) * Rational(euler_char(k)));
  }
}

TEST_CASE("simplicial complex construction", "[complex]") {
  const auto k = SimplicialComplex::from_faces({"a", "b", "c", "d"}, {{0, 1, 2}, {2, 3}});
  CHECK(k.size() == 1 + 4 + 4 + 1);
  CHECK(k.contains(Simplex{0, 2}));
  CHECK_FALSE(k.contains(Simplex{1, 3}));
  CHECK(k.label(Simplex{}) == "{}");
  CHECK(*k.index_of(Simplex{}) == 0);
  CHECK(euler_char(k) == 0);
  CHECK_THROWS_AS(SimplicialComplex::from_faces({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_faces({"a"}, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_faces({"a", "b", "c"}, {{0, 1, 2}}, 5), ResourceError);
}

TEST_CASE("f-vectors and h-polynomials", "[complex]") {
  CHECK(h_poly(fv({1, 3, 1})).to_string() == "z^2 + z - 1");
  CHECK(h_poly(fv({1, 10, 7, 1})).to_string() == "z^3 + 7z^2 - 10z + 3");
  CHECK(h_poly(fv({1, 1})).to_string() == "z");
  CHECK(h_poly(fv({1})) == RationalPoly::constant(1));
  CHECK(fv({1, 3, 1}).to_string() == "(1,3,1)");
  CHECK(fv({1, 10, 7, 1}).reduced_euler_characteristic() == 3);
  CHECK(fv({1, 1}).reduced_euler_characteristic() == 0);
  CHECK_THROWS_AS(fv({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(fv({1, 3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(fv({1, -3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(fv({1, 3, 1})[2], std::out_of_range);
  for (std::uint64_t n : {6, 30, 94, 210, 2310, 99'999}) {
    const auto s = summary(sieve(), n);
    const auto h = h_poly(s.f_vector);
    CHECK(h.is_monic());
    CHECK(h.degree() == s.dim + 1);
    CHECK(h.constant_term() == (s.dim % 2 ? -1 : 1) * Rational(s.euler_char));
  }
}
