#include "primeplex/zeros/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "primeplex/errors.hpp"

namespace primeplex {

namespace {

struct Evaluation {
  BigComplex value;
  BigComplex derivative;
  BigFloat scale;  // sum |a_k| |z|^k
};

// coeffs ascending, monic.
Evaluation evaluate(const std::vector<BigFloat>& coeffs, const std::vector<BigFloat>& moduli, const BigComplex& z,
                    mpfr_prec_t bits) {
  const std::size_t m = coeffs.size() - 1;
  BigComplex p{coeffs[m], BigFloat(bits)};
  BigComplex dp(bits);
  BigFloat r = abs(z);
  BigFloat scale = moduli[m];
  for (std::size_t k = m; k-- > 0;) {
    dp = dp * z + p;
    p = p * z;
    p.re += coeffs[k];
    scale = scale * r + moduli[k];
  }
  return {std::move(p), std::move(dp), std::move(scale)};
}

BigFloat residual_of(const Evaluation& e) {
  if (e.value.re.is_zero() && e.value.im.is_zero()) return BigFloat(e.scale.precision());
  return abs(e.value) / e.scale;
}

// Initial guesses from the upper convex hull of (k, log2|a_k|): each hull edge
// from k0 to k1 contributes k1 - k0 points on a circle of the radius it implies.
std::vector<BigComplex> newton_polygon_seeds(const std::vector<BigFloat>& coeffs, mpfr_prec_t bits) {
  const int m = static_cast<int>(coeffs.size()) - 1;
  std::vector<std::pair<int, double>> pts;
  for (int k = 0; k <= m; ++k)
    if (!coeffs[static_cast<std::size_t>(k)].is_zero()) pts.emplace_back(k, log2_abs(coeffs[static_cast<std::size_t>(k)]));
  std::vector<std::pair<int, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const double cross = (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
      if (cross >= 0) hull.pop_back(); else break;
    }
    hull.push_back(p);
  }
  std::vector<BigComplex> seeds;
  constexpr double kOffset = 0.7;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int count = hull[h + 1].first - hull[h].first;
    const double log_radius = (hull[h].second - hull[h + 1].second) / count;
    BigFloat radius(log_radius, bits);
    mpfr_exp2(radius.get(), radius.get(), MPFR_RNDN);
    for (int j = 0; j < count; ++j) {
      const double angle = 2 * std::numbers::pi * j / count + 2 * std::numbers::pi * static_cast<double>(h) / m + kOffset;
      seeds.emplace_back(radius * BigFloat(std::cos(angle), bits), radius * BigFloat(std::sin(angle), bits));
    }
  }
  return seeds;
}

}  // namespace

RootSet find_roots(const RationalPoly& p, mpfr_prec_t bits, const RootOptions& options) {
  if (p.degree() < 1) throw std::invalid_argument("find_roots: polynomial must have degree >= 1");
  if (bits < 16) throw std::invalid_argument("find_roots: precision must be at least 16 bits");

  // Monic, ascending.
  std::vector<Rational> exact_asc;
  for (int k = 0; k <= p.degree(); ++k) exact_asc.push_back(p.coefficient(k) / p.leading());

  RootSet out;
  out.precision_bits = bits;
  std::size_t zero_roots = 0;
  while (exact_asc.size() > 1 && exact_asc.front() == 0) {
    exact_asc.erase(exact_asc.begin());
    ++zero_roots;
  }
  for (std::size_t z = 0; z < zero_roots; ++z) out.roots.push_back({BigComplex(bits), BigFloat(bits), true});

  const std::size_t m = exact_asc.size() - 1;
  if (m > 0) {
    std::vector<BigFloat> coeffs, moduli;
    for (const auto& c : exact_asc) {
      coeffs.emplace_back(c, bits);
      moduli.push_back(abs(coeffs.back()));
    }

    std::vector<BigComplex> z;
    for (std::size_t i = 0; i < std::min(m, options.seeds.size()); ++i) {
      const auto& s = options.seeds[i];
      z.emplace_back(BigFloat(s.re.to_rational(), bits), BigFloat(s.im.to_rational(), bits));
    }
    if (z.size() < m) {
      auto fill = newton_polygon_seeds(coeffs, bits);
      for (std::size_t i = 0; z.size() < m; ++i) z.push_back(std::move(fill[i]));
    }

    const BigFloat tight = exp2i(-(bits - 16 - 2 * static_cast<long>(std::ceil(std::log2(m + 1.0)))), bits);
    const BigFloat step_floor = exp2i(-(bits - 4), bits);
    const int max_iterations = options.max_iterations > 0 ? options.max_iterations : 200 + 20 * static_cast<int>(m) + static_cast<int>(bits);
    std::vector<bool> frozen(m, false);
    const BigComplex one{BigFloat(1L, bits), BigFloat(bits)};

    int it = 0;
    for (; it < max_iterations; ++it) {
      bool all_frozen = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (frozen[i]) continue;
        const Evaluation e = evaluate(coeffs, moduli, z[i], bits);
        if (residual_of(e) <= tight) {
          frozen[i] = true;
          continue;
        }
        all_frozen = false;
        BigComplex correction(bits);
        if (e.derivative.re.is_zero() && e.derivative.im.is_zero()) {
          // Stationary point: nudge off it.
          correction = BigComplex(exp2i(-(bits / 4), bits) * (abs(z[i]) + BigFloat(1L, bits)), exp2i(-(bits / 4), bits));
        } else {
          const BigComplex w = e.value / e.derivative;
          BigComplex s(bits);
          for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            BigComplex diff = z[i] - z[j];
            if (diff.re.is_zero() && diff.im.is_zero()) diff.im = exp2i(-(bits / 4), bits);
            s = s + one / diff;
          }
          const BigComplex den = one - w * s;
          correction = (den.re.is_zero() && den.im.is_zero()) ? w : w / den;
        }
        z[i] = z[i] - correction;
        if (abs(correction) <= step_floor * abs(z[i])) frozen[i] = true;
      }
      if (all_frozen) break;
    }
    out.iterations = it;

    for (std::size_t i = 0; i < m; ++i) {
      Root r{z[i], residual_of(evaluate(coeffs, moduli, z[i], bits)), false};
      out.roots.push_back(std::move(r));
    }

    // Certify numerically real roots by an exact sign change of p.
    const long tol_bits = static_cast<long>(bits / 4);
    const RationalPoly monic(std::vector<Rational>(exact_asc.rbegin(), exact_asc.rend()));
    for (std::size_t i = zero_roots; i < out.roots.size(); ++i) {
      Root& r = out.roots[i];
      const BigFloat mag = abs(r.value);
      const BigFloat one_f(1L, bits);
      if (abs(r.value.im) > exp2i(-tol_bits, bits) * std::max(one_f, mag)) continue;
      const BigFloat re_mag = std::max(one_f, abs(r.value.re));
      const long e = static_cast<long>(std::floor(log2_abs(re_mag)));
      const BigFloat delta_f = exp2i(e - tol_bits, bits);
      bool isolated = true;
      for (std::size_t j = zero_roots; j < out.roots.size(); ++j) {
        if (j == i) continue;
        const BigComplex diff = out.roots[j].value - BigComplex(r.value.re, BigFloat(bits));
        if (abs(diff) <= delta_f * BigFloat(2L, bits)) isolated = false;
      }
      if (!isolated) continue;
      const Rational center = r.value.re.to_rational();
      const Rational delta = delta_f.to_rational();
      const int lo = sign(monic(center - delta));
      const int hi = sign(monic(center + delta));
      if (lo * hi <= 0) {
        r.value.im = BigFloat(bits);
        r.real_certified = true;
        r.residual = residual_of(evaluate(coeffs, moduli, r.value, bits));
      }
    }
  }

  std::sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) {
    const BigFloat ma = abs(a.value), mb = abs(b.value);
    if (ma != mb) return ma < mb;
    if (a.value.re != b.value.re) return a.value.re < b.value.re;
    return a.value.im < b.value.im;
  });

  const BigFloat accept = exp2i(-(bits / 2), bits);
  out.max_residual = BigFloat(bits);
  for (const auto& r : out.roots) {
    if (!r.residual.is_finite() || r.residual > accept)
      throw ConvergenceError("find_roots: residual " + r.residual.to_string(6) + " above 2^-" +
                             std::to_string(bits / 2) + " after " + std::to_string(out.iterations) +
                             " iterations; raise the precision");
    if (r.residual > out.max_residual) out.max_residual = r.residual;
  }
  return out;
}

}  // namespace primeplex
