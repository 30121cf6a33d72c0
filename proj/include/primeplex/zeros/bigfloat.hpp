#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "primeplex/exact/number.hpp"

namespace primeplex {

/// Owning handle to an mpfr_t with a fixed precision in bits. Binary
/// operations round to the larger of the operand precisions (round to
/// nearest).
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(long value, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }
  BigFloat(int value, mpfr_prec_t bits) : BigFloat(static_cast<long>(value), bits) {}
  BigFloat(double value, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_d(v_, value, MPFR_RNDN); }
  BigFloat(const Integer& value, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN); }
  BigFloat(const Rational& value, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN); }

  BigFloat(const BigFloat& o) : BigFloat(o.precision()) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept : BigFloat(o.precision()) { mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.precision());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Exact value as a dyadic rational.
  Rational to_rational() const;

  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;

  BigFloat operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

#define PRIMEPLEX_BIGFLOAT_OP(op, fn)                                    \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {    \
    BigFloat r(std::max(a.precision(), b.precision()));                  \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                     \
    return r;                                                            \
  }                                                                      \
  BigFloat& operator op##=(const BigFloat & b) {                         \
    if (b.precision() > precision()) mpfr_prec_round(v_, b.precision(), MPFR_RNDN); \
    fn(v_, v_, b.v_, MPFR_RNDN);                                         \
    return *this;                                                        \
  }
  PRIMEPLEX_BIGFLOAT_OP(+, mpfr_add)
  PRIMEPLEX_BIGFLOAT_OP(-, mpfr_sub)
  PRIMEPLEX_BIGFLOAT_OP(*, mpfr_mul)
  PRIMEPLEX_BIGFLOAT_OP(/, mpfr_div)
#undef PRIMEPLEX_BIGFLOAT_OP

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
/// 2^e at the given precision.
BigFloat exp2i(long e, mpfr_prec_t bits);
/// log2|x| as a double; -inf for zero.
double log2_abs(const BigFloat& x);

/// Complex number over BigFloat.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }
  bool is_real() const { return im.is_zero(); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  BigComplex operator-() const { return {-re, -im}; }

  /// "re+imi" / "re-imi", or just "re" when the imaginary part is exactly zero.
  std::string to_string(int digits) const;
};

BigFloat abs(const BigComplex& z);

}  // namespace primeplex
