#ifndef ZETASUM_REAL_HPP
#define ZETASUM_REAL_HPP

#include <gmp.h>
#include <mpfr.h>

#include <string>
#include <iosfwd>
#include <utility>

namespace zetasum {

// Arbitrary-precision real scalar backed by MPFR. Every value carries its
// own bit precision; binary operations round to the coarser operand's
// precision, so precision never silently inflates through an expression.
class Real {
 public:
  Real() : Real(53) {}
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_nan(v_);
  }
  Real(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 53);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_string(const std::string& s, mpfr_prec_t prec);
  static Real from_rational(mpq_srcptr q, mpfr_prec_t prec);
  static Real from_integer(mpz_srcptr z, mpfr_prec_t prec);
  // 2^e at minimal precision; exact
  static Real pow2(long e, mpfr_prec_t prec = 53);
  static Real nan(mpfr_prec_t prec = 53) { return Real(prec); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  // Returns a copy rounded (or zero-padded) to the given precision.
  Real with_prec(mpfr_prec_t p) const {
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  // Exponent e with |x| in [2^(e-1), 2^e); 0 for zero/nan.
  long exponent() const { return is_zero() || !is_finite() ? 0 : static_cast<long>(mpfr_get_exp(v_)); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Scientific decimal string with the given significant digit count
  // (digits <= 0 selects the count implied by the precision).
  std::string to_decimal(long digits = 0) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long x) { mpfr_add_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& operator-=(long x) { mpfr_sub_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& operator*=(long x) { mpfr_mul_si(v_, v_, x, MPFR_RNDN); return *this; }
  Real& operator/=(long x) { mpfr_div_si(v_, v_, x, MPFR_RNDN); return *this; }

  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
#define ZETASUM_REAL_BINOP(op, fn, fn_si, fn_si_rev)                       \
  friend Real operator op(const Real& a, const Real& b) {                  \
    Real r(common(a, b));                                                  \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                       \
    return r;                                                              \
  }                                                                        \
  friend Real operator op(const Real& a, long b) {                         \
    Real r(a.prec());                                                      \
    fn_si(r.v_, a.v_, b, MPFR_RNDN);                                       \
    return r;                                                              \
  }                                                                        \
  friend Real operator op(long a, const Real& b) {                         \
    Real r(b.prec());                                                      \
    fn_si_rev(r.v_, a, b.v_, MPFR_RNDN);                                   \
    return r;                                                              \
  }
  ZETASUM_REAL_BINOP(+, mpfr_add, mpfr_add_si, mpfr_si_add)
  ZETASUM_REAL_BINOP(*, mpfr_mul, mpfr_mul_si, mpfr_si_mul)
  ZETASUM_REAL_BINOP(-, mpfr_sub, mpfr_sub_si, mpfr_si_sub)
  ZETASUM_REAL_BINOP(/, mpfr_div, mpfr_div_si, mpfr_si_div)
#undef ZETASUM_REAL_BINOP

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) == 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

  static mpfr_prec_t clamp(mpfr_prec_t p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }
  static mpfr_prec_t common(const Real& a, const Real& b) {
    return a.prec() < b.prec() ? a.prec() : b.prec();
  }

 private:
  mpfr_t v_;
};

#define ZETASUM_REAL_FN1(name, fn)          \
  inline Real name(const Real& x) {         \
    Real r(x.prec());                       \
    fn(r.raw(), x.raw(), MPFR_RNDN);        \
    return r;                               \
  }
ZETASUM_REAL_FN1(abs, mpfr_abs)
ZETASUM_REAL_FN1(sqrt, mpfr_sqrt)
ZETASUM_REAL_FN1(exp, mpfr_exp)
ZETASUM_REAL_FN1(expm1, mpfr_expm1)
ZETASUM_REAL_FN1(log, mpfr_log)
ZETASUM_REAL_FN1(log1p, mpfr_log1p)
ZETASUM_REAL_FN1(sin, mpfr_sin)
ZETASUM_REAL_FN1(cos, mpfr_cos)
ZETASUM_REAL_FN1(tan, mpfr_tan)
ZETASUM_REAL_FN1(atan, mpfr_atan)
ZETASUM_REAL_FN1(asinh, mpfr_asinh)
ZETASUM_REAL_FN1(sinh, mpfr_sinh)
ZETASUM_REAL_FN1(cosh, mpfr_cosh)
ZETASUM_REAL_FN1(tanh, mpfr_tanh)
ZETASUM_REAL_FN1(sech, mpfr_sech)
ZETASUM_REAL_FN1(floor, mpfr_rint_floor)
#undef ZETASUM_REAL_FN1

inline Real atan2(const Real& y, const Real& x) {
  Real r(Real::common(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& x, const Real& y) {
  Real r(Real::common(y, x));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& x, const Real& y) {
  Real r(Real::common(y, x));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline Real pow_si(const Real& x, long e) {
  Real r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}
inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

std::ostream& operator<<(std::ostream& os, const Real& x);

// Significant decimal digits representable at the given bit precision.
long decimal_digits(mpfr_prec_t bits);

}  // namespace zetasum

#endif
