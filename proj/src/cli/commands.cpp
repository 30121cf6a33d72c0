#include "primeplex/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "primeplex/complex/prime_complex.hpp"
#include "primeplex/exact/combinatorics.hpp"
#include "primeplex/exact/subdivision.hpp"
#include "primeplex/zeros/alpha.hpp"
#include "primeplex/zeros/trajectory.hpp"

namespace primeplex::cli {

namespace {

std::string str(long v) { return std::to_string(v); }

std::string exponent_string(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string error_string(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string tagged_complex(const BigComplex& z) {
  if (z.im.is_zero()) return tagged(z.re);
  std::string im = tagged(z.im);
  if (z.im.sign() > 0) im = "+" + im;
  return tagged(z.re) + im + "i";
}

void check_dimension(int max_d) {
  if (max_d < 0 || max_d > kMaxTableDimension)
    throw UsageError("tables: max-d must be in [0, " + std::to_string(kMaxTableDimension) + "], got " +
                     std::to_string(max_d));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

OutputRecord with_metadata(OutputRecord r, std::vector<std::pair<std::string, std::string>> extra) {
  r.metadata.emplace_back("version", std::string(kVersion));
  for (auto& kv : extra) r.metadata.push_back(std::move(kv));
  return r;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string tagged(const BigFloat& x) {
  const int digits = static_cast<int>(std::floor(static_cast<double>(x.precision()) * std::log10(2.0)));
  return x.to_string(std::max(digits, 2)) + "@" + std::to_string(x.precision());
}

std::string render(const OutputRecord& record, Format format) {
  if (format == Format::csv) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
      os << '\n';
    };
    line(record.columns);
    for (const auto& row : record.rows) line(row);
    return os.str();
  }
  nlohmann::ordered_json j;
  j["command"] = record.command;
  j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : record.metadata) j["metadata"][k] = v;
  j["columns"] = record.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[record.columns[i]] = row[i];
    j["rows"].push_back(std::move(obj));
  }
  return j.dump(2) + "\n";
}

OutputRecord cmd_tables(std::string_view kind, int max_d) {
  check_dimension(max_d);
  OutputRecord r;
  r.command = "tables";
  if (kind == "f") {
    r.columns = {"d", "i", "value"};
    for (int d = -1; d <= max_d; ++d)
      for (int i = -1; i <= max_d; ++i)
        r.rows.push_back({str(d), str(i), i > d ? "0" : to_string(subdivision_count(i, d))});
  } else if (kind == "F") {
    r.columns = {"d", "i", "value"};
    for (int d = -1; d <= max_d; ++d) {
      const auto f = eigen_rationals(d);
      for (int i = -1; i <= d; ++i) r.rows.push_back({str(d), str(i), to_string(f[i])});
    }
  } else if (kind == "H") {
    r.columns = {"d", "i", "value"};
    for (int d = 0; d <= max_d; ++d) {
      const auto h = limit_coefficients(d);
      for (int i = 0; i <= d + 1; ++i) r.rows.push_back({str(d), str(i), to_string(h[static_cast<std::size_t>(i)])});
    }
  } else if (kind == "Hmatrix") {
    r.columns = {"d", "i", "j", "value"};
    for (int d = 0; d <= max_d; ++d) {
      const auto h = descent_matrix(d);
      for (int i = -1; i <= d; ++i)
        for (int j = -1; j <= d; ++j) r.rows.push_back({str(d), str(i), str(j), to_string(h(i, j))});
    }
  } else {
    throw UsageError("tables: unknown kind '" + std::string(kind) + "' (expected f, F, H or Hmatrix)");
  }
  return with_metadata(std::move(r), {{"kind", std::string(kind)}, {"max_d", str(max_d)}});
}

OutputRecord cmd_chi(const SieveTable& sieve, std::uint64_t from, std::uint64_t to) {
  if (from < 1 || from > to) throw UsageError("chi: need 1 <= from <= to");
  if (to > sieve.limit())
    throw std::out_of_range("chi: " + std::to_string(to) + " exceeds the sieve limit " + std::to_string(sieve.limit()));
  OutputRecord r;
  r.command = "chi";
  r.columns = {"n", "chi", "mertens", "dim"};
  for_each_summary(sieve, from, to, [&](const ComplexSummary& s) {
    r.rows.push_back({std::to_string(s.n), to_string(s.euler_char), std::to_string(s.mertens), str(s.dim)});
  });
  return with_metadata(std::move(r), {{"sieve_limit", std::to_string(sieve.limit())}});
}

OutputRecord cmd_alpha(const SieveTable& sieve, const std::vector<std::uint64_t>& ns) {
  OutputRecord r;
  r.command = "alpha";
  r.columns = {"n", "d", "chi", "f_d", "H1", "alpha", "exponent"};
  for (std::uint64_t n : ns) {
    if (n < 1 || n > sieve.limit())
      throw std::out_of_range("alpha: n=" + std::to_string(n) + " outside [1, " + std::to_string(sieve.limit()) + "]");
    const ComplexSummary s = summary(sieve, n);
    if (s.dim < 1) {
      r.rows.push_back({std::to_string(n), str(s.dim), to_string(s.euler_char), to_string(s.f_vector[s.dim]), "skip",
                        "skip", "skip"});
      continue;
    }
    const AlphaRecord a = alpha(s);
    r.rows.push_back({std::to_string(n), str(a.dim), to_string(a.euler_char), to_string(a.f_top), to_string(a.h1),
                      to_string(a.alpha), a.exponent ? exponent_string(*a.exponent) : "undefined"});
  }
  return with_metadata(std::move(r), {{"sieve_limit", std::to_string(sieve.limit())}});
}

OutputRecord cmd_zeros(const SieveTable& sieve, std::uint64_t n, int k_max, mpfr_prec_t precision_bits) {
  if (n < 1 || n > sieve.limit())
    throw std::out_of_range("zeros: n=" + std::to_string(n) + " outside [1, " + std::to_string(sieve.limit()) + "]");
  if (dim_of(n) < 1) throw UsageError("zeros: Delta_" + std::to_string(n) + " has dimension below 1");
  const ZeroTrajectory t = trajectory(sieve, n, k_max, precision_bits);
  OutputRecord r;
  r.command = "zeros";
  r.columns = {"k",           "precision_bits", "roots",        "rho_0",         "rho_inf",   "ratio_inf",
               "scaled_rho0", "max_residual",   "product_error", "sum_error", "ambiguous", "rho_inf_real"};
  for (const auto& e : t.entries) {
    std::string roots;
    for (const auto& root : e.roots.roots) roots += (roots.empty() ? "" : ";") + tagged_complex(root.value);
    const IdentityReport id = identity_checks(e);
    r.rows.push_back({str(e.k), std::to_string(e.roots.precision_bits), roots, tagged_complex(e.rho_0),
                      tagged_complex(e.rho_inf), tagged_complex(e.ratio_inf), tagged(e.scaled_rho0),
                      tagged(e.roots.max_residual), error_string(id.product_error), error_string(id.sum_error),
                      e.ambiguous ? "true" : "false", e.rho_inf_certified_real ? "true" : "false"});
  }
  return with_metadata(std::move(r), {{"n", std::to_string(n)},
                                      {"dim", str(t.dim())},
                                      {"precision_bits", std::to_string(precision_bits)},
                                      {"sieve_limit", std::to_string(sieve.limit())}});
}

VerifyOutcome cmd_verify(const SieveTable& sieve, verify::Suite suite) {
  VerifyOutcome out;
  out.record.command = "verify";
  out.record.columns = {"check", "status", "witness"};
  for (const auto& c : verify::run_suite(suite, sieve)) {
    out.pass = out.pass && c.pass;
    out.record.rows.push_back({c.name, c.pass ? "pass" : "FAIL", c.witness});
  }
  out.record = with_metadata(std::move(out.record), {{"suite", std::string(verify::suite_name(suite))},
                                                     {"sieve_limit", std::to_string(sieve.limit())}});
  return out;
}

}  // namespace primeplex::cli
