#include "primeplex/zeros/bigfloat.hpp"

#include <cmath>
#include <limits>
#include <memory>

namespace primeplex {

Rational BigFloat::to_rational() const {
  if (is_zero()) return 0;
  Integer mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
  Rational q(mant);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  q.canonicalize();
  return q;
}

std::string BigFloat::to_string(int digits) const {
  if (is_zero()) return "0";
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(std::max(1, digits - 1)) + "Re";
  if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) return "nan";
  std::unique_ptr<char, void (*)(char*)> guard(buf, mpfr_free_str);
  return std::string(buf);
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigFloat exp2i(long e, mpfr_prec_t bits) {
  BigFloat r(1L, bits);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

double log2_abs(const BigFloat& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  // Scale by the larger component of b to avoid overflow in |b|^2.
  if (abs(b.re) >= abs(b.im)) {
    const BigFloat r = b.im / b.re;
    const BigFloat den = b.re + b.im * r;
    return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
  }
  const BigFloat r = b.re / b.im;
  const BigFloat den = b.re * r + b.im;
  return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
}

std::string BigComplex::to_string(int digits) const {
  if (im.is_zero()) return re.to_string(digits);
  std::string imag = im.to_string(digits);
  if (im.sign() > 0) imag = "+" + imag;
  return re.to_string(digits) + imag + "i";
}

BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }

}  // namespace primeplex
