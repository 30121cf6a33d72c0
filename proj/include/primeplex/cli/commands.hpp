#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "primeplex/complex/sieve.hpp"
#include "primeplex/verify/checks.hpp"
#include "primeplex/zeros/bigfloat.hpp"

namespace primeplex::cli {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr int kMaxTableDimension = 16;
inline constexpr mpfr_prec_t kDefaultPrecisionBits = 128;

/// Bad arguments (unknown kind, inverted range, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { csv, json };
std::optional<Format> parse_format(std::string_view name);

/// A table of strings. Exact values are canonical integers or "p/q";
/// floating-point trajectory values are "<mantissa>e<exp>@<bits>".
struct OutputRecord {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
};

/// CSV is the header line and the rows, nothing else. JSON carries command,
/// metadata, columns and rows (as objects keyed by column).
std::string render(const OutputRecord& record, Format format);

/// kind is one of f, F, H, Hmatrix; 0 <= max_d <= 16 (f and F start at d = -1).
OutputRecord cmd_tables(std::string_view kind, int max_d);
OutputRecord cmd_chi(const SieveTable& sieve, std::uint64_t from, std::uint64_t to);
/// Complexes of dimension < 1 get "skip" in the H1, alpha and exponent columns.
OutputRecord cmd_alpha(const SieveTable& sieve, const std::vector<std::uint64_t>& ns);
OutputRecord cmd_zeros(const SieveTable& sieve, std::uint64_t n, int k_max, mpfr_prec_t precision_bits);

struct VerifyOutcome {
  OutputRecord record;
  bool pass = true;
};
VerifyOutcome cmd_verify(const SieveTable& sieve, verify::Suite suite);

/// "<digits>e<exp>@<bits>" with as many significant digits as the precision carries.
std::string tagged(const BigFloat& x);

}  // namespace primeplex::cli
