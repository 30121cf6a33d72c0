// One line per acceptance criterion: "[PASS|FAIL] <n> <title> (<seconds>s) <detail>".
// Reference tables are compared exactly as printed. Exit status is nonzero if
// any criterion fails, or, with --expect-fail a,b,..., unless exactly the
// listed criteria fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "primeplex/cli/commands.hpp"
#include "primeplex/complex/prime_complex.hpp"
#include "primeplex/complex/simplicial_complex.hpp"
#include "primeplex/exact/matrix.hpp"
#include "primeplex/exact/subdivision.hpp"
#include "primeplex/verify/checks.hpp"
#include "primeplex/zeros/alpha.hpp"
#include "primeplex/zeros/growth.hpp"
#include "primeplex/zeros/trajectory.hpp"

using namespace primeplex;

namespace {

// Runtime budgets in seconds.
constexpr double kChiBudget = 1.0;
constexpr double kSubdivisionBudget = 10.0;
constexpr double kZerosBudget = 60.0;
constexpr double kMertensBudget = 10.0;

// Zero-dynamics tolerances.
constexpr double kSixScale = 8.0;  // times 2^-k
constexpr double kThirtyRatioTol = 1e-3;
constexpr double kThirtyScaledTol = 1e-2;
constexpr double kInteriorTol = 1e-6;
constexpr double kVietaTol = 1e-9;
constexpr mpfr_prec_t kSixBits = 128;
constexpr mpfr_prec_t kThirtyBits = 512;

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::vector<std::string> read_lines(const std::string& name) {
  std::ifstream in(std::string(PRIMEPLEX_GOLDEN_DIR) + "/" + name);
  if (!in) throw std::runtime_error("cannot open reference file " + name);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string first_field(const std::string& line) { return line.substr(0, line.find(',')); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double dist(const BigComplex& z, double re) { return std::hypot(z.re.to_double() - re, z.im.to_double()); }

// Compares line by line; each mismatch is reported as "<file>: <ours> != <printed>".
void compare_table(Outcome& out, const std::string& file, const std::string& ours) {
  const auto a = split_lines(ours);
  const auto b = read_lines(file);
  if (a.size() != b.size()) {
    out.require(false, file + ": " + std::to_string(a.size()) + " lines, expected " + std::to_string(b.size()));
    return;
  }
  for (std::size_t i = 0; i < a.size(); ++i) out.require(a[i] == b[i], file + ": " + a[i] + " != " + b[i]);
}

Outcome criterion_chi_table() {
  Outcome out;
  const SieveTable sieve(1'000);
  const auto ref = read_lines("chi.csv");
  for (std::size_t i = 1; i < ref.size(); ++i) {
    const auto n = std::stoull(first_field(ref[i]));
    const auto s = summary(sieve, n);
    out.require(std::to_string(n) + "," + to_string(s.euler_char) == ref[i], "n=" + std::to_string(n));
  }
  std::uint64_t first = 0;
  for (std::uint64_t n = 2; n <= sieve.limit() && !first; ++n)
    if (summary(sieve, n).euler_char < 0) first = n;
  out.require(first == 94, "first negative at " + std::to_string(first));
  out.note = std::to_string(ref.size() - 1) + " values, first negative n=" + std::to_string(first);
  return out;
}

Outcome criterion_combinatorial_tables() {
  Outcome out;
  compare_table(out, "f.csv", cli::render(cli::cmd_tables("f", 7), cli::Format::csv));
  compare_table(out, "F.csv", cli::render(cli::cmd_tables("F", 7), cli::Format::csv));
  compare_table(out, "H.csv", cli::render(cli::cmd_tables("H", 7), cli::Format::csv));
  compare_table(out, "Hmatrix.csv", cli::render(cli::cmd_tables("Hmatrix", 4), cli::Format::csv));
  return out;
}

Outcome criterion_identity_suite() {
  Outcome out;
  const SieveTable unused(1);
  const auto results = verify::run_suite(verify::Suite::core, unused);
  for (const auto& r : results) out.require(r.pass, r.name + " [" + r.witness + "]");
  out.note = std::to_string(results.size()) + " checks";
  return out;
}

Outcome criterion_subdivision_consistency() {
  Outcome out;
  for (std::uint64_t n : {6, 30}) {
    auto k = explicit_complex(n);
    const FVector base = f_vector(k);
    const TransferMatrix f = transfer_matrix(base.dim());
    std::vector<Integer> image(base.counts().begin(), base.counts().end());
    for (int step = 1; step <= 2; ++step) {
      k = barycentric_subdivide(k);
      image = apply<Integer, Integer>(f, image);
      const FVector expected(image);
      out.require(f_vector(k) == expected, "n=" + std::to_string(n) + " k=" + std::to_string(step) + " " +
                                               f_vector(k).to_string() + " != " + expected.to_string());
    }
  }
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 50; ++t) {
    const auto k = verify::random_complex(rng, 1'000);
    const auto s = barycentric_subdivide(k);
    out.require(k.size() <= 1'000, "complex " + std::to_string(t) + " too large");
    out.require(euler_char(s) == euler_char(k) && s.dim() == k.dim(),
                "random complex " + std::to_string(t) + " " + f_vector(k).to_string());
  }
  return out;
}

Outcome criterion_growth_expansion() {
  Outcome out;
  const SieveTable sieve(1'000);
  for (std::uint64_t n : {6, 30, 210}) {
    const FVector base = summary(sieve, n).f_vector;
    const GrowthExpansion g(base);
    const int d = base.dim();
    const EigenRationals e = eigen_rationals(d);
    for (int i = 0; i <= d; ++i)
      out.require(g.coefficient(0, i) == Rational(base[d]) * e[i],
                  "n=" + std::to_string(n) + " C_{0," + std::to_string(i) + "}");
    for (int k = 0; k <= 20; ++k) {
      const auto closed = g.evaluate(k);
      const FVector exact = subdivided_f(base, k);
      bool same = closed.size() == exact.counts().size();
      for (std::size_t i = 0; same && i < closed.size(); ++i) same = closed[i] == Rational(exact.counts()[i]);
      out.require(same, "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return out;
}

Outcome criterion_zero_dynamics() {
  Outcome out;
  const SieveTable sieve(1'000);
  const auto t6 = trajectory(sieve, 6, 16, kSixBits);
  const auto t30 = trajectory(sieve, 30, 12, kThirtyBits);

  for (const auto& e : t6.entries) {
    if (e.k < 4) continue;
    const double tol = kSixScale * std::ldexp(1.0, -e.k);
    const double r = dist(e.ratio_inf, 1);
    const double s = std::fabs(e.scaled_rho0.to_double() - 1);
    out.require(r <= tol, "6: k=" + std::to_string(e.k) + " |rho_inf/(-2^k) - 1| = " + sci(r));
    out.require(s <= tol, "6: k=" + std::to_string(e.k) + " ||rho_0| 2^k - 1| = " + sci(s));
  }

  const auto& e = t30.entries.back();
  const double r = dist(e.ratio_inf, 1);
  const double s = std::fabs(e.scaled_rho0.to_double() - 6);
  out.require(e.roots.precision_bits >= 512, "30: precision below 512 bits");
  out.require(r <= kThirtyRatioTol, "30: |rho_inf/(-6^k/2) - 1| = " + sci(r));
  out.require(s <= kThirtyScaledTol, "30: ||rho_0| 6^k - 6| = " + sci(s));
  const double interior = e.interior.empty() ? INFINITY : dist(e.interior.front(), -1);
  out.require(interior <= kInteriorTol, "30: interior root at distance " + sci(interior) + " from -1");
  const double product = dist(e.interior_product, -1);
  out.require(product <= kInteriorTol, "30: interior product at distance " + sci(product) + " from -1");
  out.require(e.rho_inf_certified_real, "30: rho_inf not certified real");

  double worst = 0;
  for (const auto* t : {&t6, &t30})
    for (const auto& entry : t->entries) {
      const auto id = identity_checks(entry);
      worst = std::max({worst, id.product_error, id.sum_error});
    }
  out.require(worst <= kVietaTol, "Vieta relative error " + sci(worst));
  out.note = "ratio " + sci(r) + ", scaled " + sci(s) + ", interior " + sci(interior) + ", Vieta " + sci(worst);
  return out;
}

Outcome criterion_alpha_records() {
  Outcome out;
  const SieveTable sieve(10'000);
  const auto ref = read_lines("alpha.csv");
  for (std::size_t i = 1; i < ref.size(); ++i) {
    const auto n = std::stoull(first_field(ref[i]));
    const auto a = alpha(sieve, n);
    const std::string ours = std::to_string(n) + "," + to_string(a.alpha);
    out.require(ours == ref[i], ours + " != " + ref[i]);
  }
  std::uint64_t checked = 0;
  for_each_summary(sieve, 1, 10'000, [&](const ComplexSummary& s) {
    if (s.dim < 1) return;
    const auto a = alpha(s);
    ++checked;
    if (a.alpha * a.h1 * Rational(a.f_top) != Rational(s.euler_char)) out.require(false, "identity n=" + std::to_string(s.n));
  });
  out.note = std::to_string(ref.size() - 1) + " printed values, identity on " + std::to_string(checked) + " n";
  return out;
}

Outcome criterion_mertens_oracle() {
  Outcome out;
  const SieveTable sieve(100'000);
  std::int64_t running = 0;
  std::uint64_t checked = 0;
  for_each_summary(sieve, 1, 100'000, [&](const ComplexSummary& s) {
    // alternating weight counts against a running Moebius sum
    running += sieve.moebius(s.n);
    ++checked;
    if (s.f_vector.reduced_euler_characteristic() != -running) out.require(false, "n=" + std::to_string(s.n));
  });
  out.require(checked == 100'000, "checked " + std::to_string(checked));
  out.note = std::to_string(checked) + " values";
  return out;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
  double budget;  // seconds, 0 for none
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  bool baseline = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      baseline = true;
      std::istringstream list(argv[++i]);
      for (std::string id; std::getline(list, id, ',');) expected_failures.insert(std::stoi(id));
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail id,id,...]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "reduced Euler characteristic table, n = 1..44", criterion_chi_table, kChiBudget},
      {2, "f, F, H tables and descent matrices", criterion_combinatorial_tables, 0},
      {3, "exact identity suite", criterion_identity_suite, 0},
      {4, "subdivision consistency", criterion_subdivision_consistency, kSubdivisionBudget},
      {5, "growth expansion", criterion_growth_expansion, 0},
      {6, "zero dynamics", criterion_zero_dynamics, kZerosBudget},
      {7, "alpha records", criterion_alpha_records, 0},
      {8, "Mertens oracle, n <= 10^5", criterion_mertens_oracle, kMertensBudget},
  };

  std::set<int> failed_ids;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0) o.require(seconds < c.budget, "runtime " + std::to_string(seconds) + "s over budget");
    if (!o.pass) failed_ids.insert(c.id);

    std::printf("[%s] %d %s (%.2fs)", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds);
    if (!o.note.empty()) std::printf(" %s", o.note.c_str());
    std::printf("\n");
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed_ids.size(), criteria.size());
  if (!baseline) return failed_ids.empty() ? 0 : 1;
  const bool matches = failed_ids == expected_failures;
  std::printf("failures %s the expected set\n", matches ? "match" : "do not match");
  return matches ? 0 : 1;
}
