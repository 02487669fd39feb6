#include "zetasum/complex.hpp"

#include <ostream>

namespace zetasum {

Complex exp(const Complex& z) {
  mpfr_prec_t p = z.prec();
  Real r(p), c(p), s(p);
  mpfr_exp(r.raw(), z.re().raw(), MPFR_RNDN);
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return Complex(r * c, r * s);
}

Complex log(const Complex& z) {
  return Complex(log(abs(z)), arg(z));
}

Complex sin(const Complex& z) {
  mpfr_prec_t p = z.prec();
  Real s(p), c(p);
  mpfr_sin_cos(s.raw(), c.raw(), z.re().raw(), MPFR_RNDN);
  return Complex(s * cosh(z.im()), c * sinh(z.im()));
}

Complex cos(const Complex& z) {
  mpfr_prec_t p = z.prec();
  Real s(p), c(p);
  mpfr_sin_cos(s.raw(), c.raw(), z.re().raw(), MPFR_RNDN);
  return Complex(c * cosh(z.im()), -(s * sinh(z.im())));
}

Complex sqrt(const Complex& z) {
  if (z.im().is_zero() && z.re().sgn() >= 0) return Complex(sqrt(z.re()));
  // principal root via modulus/argument halving
  Real m = sqrt(abs(z));
  Real a = arg(z) / 2;
  mpfr_prec_t p = z.prec();
  Real s(p), c(p);
  mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
  return Complex(m * c, m * s);
}

Complex pow(const Complex& z, const Complex& s) {
  if (s.im().is_zero() && z.im().is_zero() && z.re().sgn() > 0) {
    return Complex(pow(z.re(), s.re()));
  }
  return exp(s * log(z));
}

Complex pow_si(const Complex& z, long n) {
  if (n == 0) return Complex(1L, z.prec());
  bool inv = n < 0;
  unsigned long e = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Complex acc(1L, z.prec());
  Complex base = z;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return inv ? Complex(1L, z.prec()) / acc : acc;
}

Complex pow_real_base(const Real& x, const Complex& s) {
  Real lx = log(x);
  return exp(Complex(s.re() * lx, s.im() * lx));
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  os << z.re().to_decimal();
  if (!z.im().is_zero()) {
    os << (z.im().sgn() < 0 ? " - " : " + ") << abs(z.im()).to_decimal() << "i";
  }
  return os;
}

}  // namespace zetasum
