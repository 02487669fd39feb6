#ifndef ZETASUM_COMPLEX_HPP
#define ZETASUM_COMPLEX_HPP

#include <iosfwd>

#include "zetasum/real.hpp"

namespace zetasum {

// Rectangular complex scalar; both parts always share one precision.
class Complex {
 public:
  Complex() : re_(53), im_(53) { zero_im(); }
  explicit Complex(mpfr_prec_t prec) : re_(prec), im_(prec) {
    mpfr_set_zero(re_.raw(), 1);
    mpfr_set_zero(im_.raw(), 1);
  }
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) { align(); }
  explicit Complex(Real re) : re_(std::move(re)), im_(re_.prec()) { zero_im(); }
  Complex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
  Complex(long re, mpfr_prec_t prec) : re_(re, prec), im_(0L, prec) {}

  static Complex i(mpfr_prec_t prec) { return Complex(Real(0L, prec), Real(1L, prec)); }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re_mut() { return re_; }
  Real& im_mut() { return im_; }

  mpfr_prec_t prec() const { return re_.prec(); }
  Complex with_prec(mpfr_prec_t p) const { return Complex(re_.with_prec(p), im_.with_prec(p)); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  bool is_real() const { return im_.is_zero(); }

  friend Complex operator-(const Complex& z) { return Complex(-z.re_, -z.im_); }
  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real den = b.re_ * b.re_ + b.im_ * b.im_;
    return Complex((a.re_ * b.re_ + a.im_ * b.im_) / den,
                   (a.im_ * b.re_ - a.re_ * b.im_) / den);
  }
  friend Complex operator+(const Complex& a, const Real& x) { return Complex(a.re_ + x, a.im_.with_prec(Real::common(a.re_, x))); }
  friend Complex operator-(const Complex& a, const Real& x) { return Complex(a.re_ - x, a.im_.with_prec(Real::common(a.re_, x))); }
  friend Complex operator*(const Complex& a, const Real& x) { return Complex(a.re_ * x, a.im_ * x); }
  friend Complex operator/(const Complex& a, const Real& x) { return Complex(a.re_ / x, a.im_ / x); }
  friend Complex operator*(const Real& x, const Complex& a) { return a * x; }
  friend Complex operator+(const Complex& a, long n) { return Complex(a.re_ + n, a.im_); }
  friend Complex operator-(const Complex& a, long n) { return Complex(a.re_ - n, a.im_); }
  friend Complex operator*(const Complex& a, long n) { return Complex(a.re_ * n, a.im_ * n); }
  friend Complex operator/(const Complex& a, long n) { return Complex(a.re_ / n, a.im_ / n); }
  friend Complex operator-(long n, const Complex& a) { return Complex(n - a.re_, -a.im_); }
  friend Complex operator/(long n, const Complex& a) {
    Real den = a.re_ * a.re_ + a.im_ * a.im_;
    return Complex(n * a.re_ / den, (-n) * a.im_ / den);
  }

  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  void align() {
    mpfr_prec_t p = Real::common(re_, im_);
    if (re_.prec() != p) re_ = re_.with_prec(p);
    if (im_.prec() != p) im_ = im_.with_prec(p);
  }
  void zero_im() { mpfr_set_zero(im_.raw(), 1); }

  Real re_, im_;
};

inline Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }
inline Real abs(const Complex& z) { return hypot(z.re(), z.im()); }
inline Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }
inline Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z);
// Principal branch.
Complex log(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex sqrt(const Complex& z);
// exp(s*log(z)), principal branch of log
Complex pow(const Complex& z, const Complex& s);
Complex pow_si(const Complex& z, long n);
// x^s for real x > 0
Complex pow_real_base(const Real& x, const Complex& s);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace zetasum

#endif
