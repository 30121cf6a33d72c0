#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "primeplex/complex/sieve.hpp"
#include "primeplex/complex/simplicial_complex.hpp"
#include "primeplex/exact/matrix.hpp"

namespace primeplex::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  /// First counterexample, or a short measurement on success.
  std::string witness;
};

enum class Suite { core, complex, zeros, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

/// The invariant checks of one suite. The complex and zeros suites need a
/// sieve reaching 10^5.
std::vector<CheckResult> run_suite(Suite suite, const SieveTable& sieve);

inline constexpr std::uint64_t kRequiredSieveLimit = 100'000;

// Building blocks, shared with the test suites.

/// Entries of the descent matrix in the monotone order
///   (0, d), (0, d-1), ..., (0, -1), (1, d), ..., (1, -1), ..., (m, d), ..., (m, N)
/// with m = floor((d-1)/2), N = -1 for even d and N = m for odd d.
std::vector<Integer> monotone_chain(const DescentMatrix& h);

/// Random n x n matrix with negative diagonal, positive off-diagonal
/// entries and every column's off-diagonal sum below |diagonal|.
Matrix<Rational> random_column_dominant(std::mt19937_64& rng, std::size_t n);

/// Random complex on 2..8 vertices from up to six random faces, with at most
/// max_simplices simplices.
SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t max_simplices);

/// f-vectors of Delta_n for every n <= limit, read off one explicit complex
/// by sorting its simplices by the product of their primes.
std::vector<FVector> explicit_f_vectors(std::uint64_t limit);

/// monotone_chain is non-decreasing for 1 <= d <= max_d.
CheckResult monotone_chain_check(int max_d);
/// Both the plain and the replaced-column sign claims on `count` random
/// matrices of size 1..8.
CheckResult determinant_sign_instances(int count, std::uint64_t seed);

}  // namespace primeplex::verify
