#ifndef ZETASUM_SPECFUN_HPP
#define ZETASUM_SPECFUN_HPP

#include "zetasum/complex.hpp"
#include "zetasum/real.hpp"

namespace zetasum {

Real pi_const(mpfr_prec_t prec);
Real euler_gamma(mpfr_prec_t prec);
Real log2_const(mpfr_prec_t prec);
Real log_2pi(mpfr_prec_t prec);

// log Gamma on (0, inf).
Real log_gamma(const Real& x);

// Gamma and digamma for complex arguments, recurrence shift into the
// Stirling zone plus the asymptotic series with Bernoulli coefficients.
// Both throw std::domain_error at nonpositive-integer poles.
Complex gamma(const Complex& z);
Complex digamma(const Complex& z);

enum class ZetaMethod { alternating_accelerated, euler_maclaurin };

struct ZetaOracleConfig {
  ZetaMethod method = ZetaMethod::alternating_accelerated;
  long terms = 0;  // 0: derive from the method's error bound
  mpfr_prec_t precision = 128;
};

// Reference evaluation of zeta(s), valid for Re(s) > 0 including the
// critical line; throws std::domain_error at s = 1.
//
// alternating_accelerated: Borwein's Chebyshev-weighted eta series,
//   zeta(s) = sum_{k<n} (-1)^k (d_k - d_n)(k+1)^{-s} / (d_n (2^{1-s} - 1)),
//   whose error decays like (3+sqrt(8))^{-n} times (1+2|t|) e^{pi|t|/2}.
// euler_maclaurin: truncated Dirichlet sum with Bernoulli-number tail
//   corrections and an explicit remainder bound; kept as an independent
//   cross-check of the primary oracle.
Complex zeta_reference(const Complex& s, const ZetaOracleConfig& cfg = {});

// zeta(k) for integer k >= 2, cached per precision. Used heavily by the
// coefficient tables.
Real zeta_int(long k, mpfr_prec_t prec);

}  // namespace zetasum

#endif
