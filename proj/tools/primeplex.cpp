// primeplex: tables, Euler characteristics, alpha values and h-polynomial
// zeros of squarefree-divisor complexes.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "primeplex/cli/commands.hpp"
#include "primeplex/errors.hpp"

namespace {

using namespace primeplex;

std::uint64_t sieve_limit() {
  if (const char* env = std::getenv("PRIMEPLEX_SIEVE_LIMIT")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string_view(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw cli::UsageError(std::string("PRIMEPLEX_SIEVE_LIMIT must be a positive integer, got '") + env + "'");
  }
  return kDefaultSieveLimit;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "primeplex: cannot open " << out_path << " for writing\n";
    return 3;
  }
  file << text;
  return file ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squarefree-divisor complexes under barycentric subdivision"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);

  std::string format_name = "csv";
  std::string out_path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "Write to FILE instead of stdout");
  };

  std::string kind;
  int max_d = 7;
  auto* tables = app.add_subcommand("tables", "Subdivision tables f, F, H or the descent matrices");
  tables->add_option("--kind", kind, "f | F | H | Hmatrix")->required();
  tables->add_option("--max-d", max_d, "Largest dimension (<= 16)");
  common(tables);

  std::uint64_t from = 1, to = 44;
  auto* chi = app.add_subcommand("chi", "Reduced Euler characteristic, Mertens value and dimension of Delta_n");
  chi->add_option("--from", from);
  chi->add_option("--to", to);
  common(chi);

  std::vector<std::uint64_t> ns;
  std::uint64_t alpha_from = 6, alpha_to = 0;
  auto* alpha = app.add_subcommand("alpha", "Exact alpha_n for a list or a range of n");
  auto* n_opt = alpha->add_option("--n", ns, "Repeatable");
  auto* to_opt = alpha->add_option("--to", alpha_to, "Range end");
  alpha->add_option("--from", alpha_from, "Range start (with --to)")->needs(to_opt);
  n_opt->excludes(to_opt);
  common(alpha);

  std::uint64_t zeros_n = 6;
  int k_max = 8;
  long precision = cli::kDefaultPrecisionBits;
  auto* zeros = app.add_subcommand("zeros", "Zeros of the h-polynomial along repeated subdivision");
  zeros->add_option("--n", zeros_n)->required();
  zeros->add_option("--k", k_max, "Largest number of subdivisions");
  zeros->add_option("--precision-bits", precision, "Minimum working precision")->check(CLI::Range(16L, 1L << 20));
  common(zeros);

  std::string suite_name = "all";
  auto* verify = app.add_subcommand("verify", "Run invariant suites; exit status 1 on any failure");
  verify->add_option("--suite", suite_name)->check(CLI::IsMember({"all", "core", "complex", "zeros"}));
  common(verify);

  CLI11_PARSE(app, argc, argv);
  const cli::Format format = *cli::parse_format(format_name);

  try {
    if (tables->parsed()) return emit(cli::render(cli::cmd_tables(kind, max_d), format), out_path);

    const SieveTable sieve(sieve_limit());
    if (chi->parsed()) return emit(cli::render(cli::cmd_chi(sieve, from, to), format), out_path);
    if (alpha->parsed()) {
      if (ns.empty()) {
        if (alpha_to == 0) throw cli::UsageError("alpha: give --n or --to");
        if (alpha_from > alpha_to) throw cli::UsageError("alpha: --from exceeds --to");
        for (auto n = alpha_from; n <= alpha_to; ++n) ns.push_back(n);
      }
      return emit(cli::render(cli::cmd_alpha(sieve, ns), format), out_path);
    }
    if (zeros->parsed()) return emit(cli::render(cli::cmd_zeros(sieve, zeros_n, k_max, precision), format), out_path);
    if (verify->parsed()) {
      const auto outcome = cli::cmd_verify(sieve, *verify::parse_suite(suite_name));
      const int rc = emit(cli::render(outcome.record, format), out_path);
      return rc ? rc : (outcome.pass ? 0 : 1);
    }
  } catch (const cli::UsageError& e) {
    std::cerr << "primeplex: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "primeplex: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
