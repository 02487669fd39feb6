#include "zetasum/real.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace zetasum {

Real Real::from_string(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("Real::from_string: cannot parse '" + s + "'");
  }
  return r;
}

Real Real::from_rational(mpq_srcptr q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.raw(), q, MPFR_RNDN);
  return r;
}

Real Real::from_integer(mpz_srcptr z, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.raw(), z, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
  return r;
}

long decimal_digits(mpfr_prec_t bits) {
  long d = static_cast<long>(std::floor(static_cast<double>(bits) * 0.3010299956639812));
  return d < 2 ? 2 : d;
}

std::string Real::to_decimal(long digits) const {
  if (digits <= 0) digits = decimal_digits(prec());
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1), v_);
  return std::string(buf.data());
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.to_decimal();
}

}  // namespace zetasum
