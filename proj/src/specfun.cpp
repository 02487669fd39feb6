#include "zetasum/specfun.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "zetasum/numcore.hpp"

namespace zetasum {

namespace {

// One lazily grown constant; serves lower precisions by rounding.
class CachedConst {
 public:
  explicit CachedConst(int (*fn)(mpfr_ptr, mpfr_rnd_t)) : fn_(fn) {}

  Real get(mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(m_);
    if (!init_ || value_.prec() < prec) {
      value_ = Real(prec + 32);
      fn_(value_.raw(), MPFR_RNDN);
      init_ = true;
    }
    return value_.with_prec(prec);
  }

 private:
  std::mutex m_;
  int (*fn_)(mpfr_ptr, mpfr_rnd_t);
  Real value_;
  bool init_ = false;
};

CachedConst pi_cache(&mpfr_const_pi);
CachedConst euler_cache(&mpfr_const_euler);
CachedConst log2_cache(&mpfr_const_log2);

bool is_nonpositive_integer(const Complex& z) {
  return z.im().is_zero() && mpfr_integer_p(z.re().raw()) != 0 && z.re().sgn() <= 0;
}

// Stirling zone: the asymptotic series reaches 2^-W once |z| >= ~W ln2/(2 pi).
long stirling_shift_target(mpfr_prec_t work) {
  return std::max<long>(10, static_cast<long>(0.12 * static_cast<double>(work)) + 6);
}

// log Gamma(w) by the Stirling series; requires Re(w) >= stirling zone.
// The imaginary part is a logarithm branch, not necessarily the principal
// one; exp() of the result and the real part are branch-independent.
Complex log_gamma_stirling(const Complex& w, mpfr_prec_t work) {
  Complex acc = (w - Real(0.5, work)) * log(w) - w + Complex(log_2pi(work) / 2);
  Complex w2 = w * w;
  Complex zpow = w;  // w^{2k-1}
  Real tol = Real::pow2(-static_cast<long>(work) - 8, 64);
  for (long k = 1; k < 10000; ++k) {
    BigRat b = bernoulli_number(static_cast<unsigned long>(2 * k)) /
               BigRat(2 * k * (2 * k - 1));
    Complex term = Complex(Real::from_rational(b.get_mpq_t(), work)) / zpow;
    acc += term;
    if (abs(term) < tol) break;
    zpow = zpow * w2;
  }
  return acc;
}

Complex digamma_stirling(const Complex& w, mpfr_prec_t work) {
  Complex acc = log(w) - 1L / (w * 2L);
  Complex w2 = w * w;
  Complex zpow = w2;  // w^{2k}
  Real tol = Real::pow2(-static_cast<long>(work) - 8, 64);
  for (long k = 1; k < 10000; ++k) {
    BigRat b = bernoulli_number(static_cast<unsigned long>(2 * k)) / BigRat(2 * k);
    Complex term = Complex(Real::from_rational(b.get_mpq_t(), work)) / zpow;
    acc -= term;
    if (abs(term) < tol) break;
    zpow = zpow * w2;
  }
  return acc;
}

}  // namespace

Real pi_const(mpfr_prec_t prec) { return pi_cache.get(prec); }
Real euler_gamma(mpfr_prec_t prec) { return euler_cache.get(prec); }
Real log2_const(mpfr_prec_t prec) { return log2_cache.get(prec); }

Real log_2pi(mpfr_prec_t prec) {
  Real x = pi_const(prec + 8) * 2L;
  return log(x).with_prec(prec);
}

Real log_gamma(const Real& x) {
  if (x.sgn() <= 0) throw std::domain_error("log_gamma requires x > 0");
  Real r(x.prec());
  int sign = 0;
  mpfr_lgamma(r.raw(), &sign, x.raw(), MPFR_RNDN);
  return r;
}

Complex gamma(const Complex& z) {
  if (is_nonpositive_integer(z)) throw std::domain_error("gamma pole");
  mpfr_prec_t prec = z.prec();
  mpfr_prec_t work = prec + 48;
  Complex zw = z.with_prec(work);
  if (z.im().is_zero() && z.re().sgn() > 0) {
    Real g(work);
    mpfr_gamma(g.raw(), zw.re().raw(), MPFR_RNDN);
    return Complex(g.with_prec(prec));
  }
  if (zw.re() < Real(0.25, work)) {
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    Complex pz = Complex(pi_const(work)) * zw;
    Complex denom = sin(pz) * gamma((1L - zw).with_prec(work));
    return (Complex(pi_const(work)) / denom).with_prec(prec);
  }
  long shift_to = stirling_shift_target(work);
  Complex w = zw;
  Complex logprod(work);  // log of the product of shifted-out factors
  int shifted = 0;
  while (w.re() < Real(static_cast<long>(shift_to), work)) {
    logprod += log(w);
    w = w + 1L;
    ++shifted;
    if (shifted > 4 * shift_to + 64) break;
  }
  Complex lg = log_gamma_stirling(w, work) - logprod;
  return exp(lg).with_prec(prec);
}

Complex digamma(const Complex& z) {
  if (is_nonpositive_integer(z)) throw std::domain_error("digamma pole");
  mpfr_prec_t prec = z.prec();
  mpfr_prec_t work = prec + 48;
  Complex zw = z.with_prec(work);
  if (z.im().is_zero() && z.re().sgn() > 0) {
    Real d(work);
    mpfr_digamma(d.raw(), zw.re().raw(), MPFR_RNDN);
    return Complex(d.with_prec(prec));
  }
  if (zw.re() < Real(0.25, work)) {
    // Psi(z) = Psi(1-z) - pi cot(pi z)
    Complex pz = Complex(pi_const(work)) * zw;
    Complex cot = cos(pz) / sin(pz);
    return (digamma((1L - zw).with_prec(work)) - Complex(pi_const(work)) * cot)
        .with_prec(prec);
  }
  long shift_to = stirling_shift_target(work);
  Complex w = zw;
  Complex acc(work);
  int shifted = 0;
  while (w.re() < Real(static_cast<long>(shift_to), work)) {
    acc += 1L / w;
    w = w + 1L;
    ++shifted;
    if (shifted > 4 * shift_to + 64) break;
  }
  return (digamma_stirling(w, work) - acc).with_prec(prec);
}

// ---------------------------------------------------------------------------
// zeta oracles

namespace {

// Borwein weights d_0..d_n for a given n (exact integers), cached.
std::mutex dtab_mutex;
std::map<long, std::shared_ptr<const std::vector<BigInt>>> dtab_cache;

std::shared_ptr<const std::vector<BigInt>> borwein_weights(long n) {
  {
    std::lock_guard<std::mutex> lock(dtab_mutex);
    auto it = dtab_cache.find(n);
    if (it != dtab_cache.end()) return it->second;
  }
  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!); term ratio
  // t_i/t_{i-1} = 4 (n+i-1)(n-i+1) / (2i (2i-1)), t_0 = 1/n.
  auto tab = std::make_shared<std::vector<BigInt>>();
  tab->reserve(static_cast<size_t>(n) + 1);
  BigRat t(1, n);
  BigRat sum = t;
  BigRat nn(n);
  for (long k = 0; k <= n; ++k) {
    if (k > 0) {
      t *= BigRat(BigInt(4) * BigInt(n + k - 1) * BigInt(n - k + 1),
                  BigInt(2 * k) * BigInt(2 * k - 1));
      sum += t;
    }
    BigRat d = nn * sum;
    if (d.get_den() != 1) throw std::logic_error("borwein weights not integral");
    tab->push_back(d.get_num());
  }
  std::lock_guard<std::mutex> lock(dtab_mutex);
  dtab_cache.emplace(n, tab);
  return tab;
}

long borwein_terms(mpfr_prec_t prec, double abs_im) {
  // bits(n) ~ n log2(3+sqrt 8) minus the (1+2|t|) e^{pi|t|/2} growth
  double bits = static_cast<double>(prec) * 1.1 + 16.0;
  bits += std::abs(abs_im) * 2.2662;  // pi/(2 ln 2)
  bits += std::log2(1.0 + 2.0 * std::abs(abs_im));
  long n = static_cast<long>(bits / 2.5431) + 12;  // log2(3+sqrt 8)
  return n;
}

Complex zeta_borwein(const Complex& s, mpfr_prec_t prec, long terms) {
  mpfr_prec_t work = prec + 32;
  long n = terms > 0 ? terms : borwein_terms(prec, s.im().to_double());
  auto d = borwein_weights(n);
  Complex sw = s.with_prec(work);
  Complex sum(work);
  Real kp(work);
  bool s_real = s.im().is_zero();
  for (long k = 0; k < n; ++k) {
    BigInt c = (*d)[static_cast<size_t>(k)] - (*d)[static_cast<size_t>(n)];
    if (k % 2 != 0) c = -c;
    if (s_real) {
      mpfr_set_si(kp.raw(), k + 1, MPFR_RNDN);
      Real term = pow(kp, sw.re());
      Real t2(work);
      mpfr_z_div(t2.raw(), c.get_mpz_t(), term.raw(), MPFR_RNDN);
      sum += Complex(t2);
    } else {
      Complex term = pow_real_base(Real(k + 1, work), -sw);
      Real cf = Real::from_integer(c.get_mpz_t(), work);
      sum += term * cf;
    }
  }
  // zeta = sum / (d_n (2^{1-s} - 1))
  Complex two_pow = pow_real_base(Real(2L, work), 1L - sw);
  Complex denom = (two_pow - 1L) * Real::from_integer((*d)[static_cast<size_t>(n)].get_mpz_t(), work);
  return (sum / denom).with_prec(prec);
}

Complex zeta_euler_maclaurin(const Complex& s, mpfr_prec_t prec, long terms) {
  mpfr_prec_t work = prec + 48;
  Complex sw = s.with_prec(work);
  double tau = std::abs(s.im().to_double());
  long N = terms > 0 ? terms
                     : std::max<long>(16, static_cast<long>(0.28 * static_cast<double>(work) +
                                                            0.6 * tau));
  Real tol = Real::pow2(-static_cast<long>(prec) - 8, 64);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Complex acc(work);
    for (long j = 1; j < N; ++j) acc += pow_real_base(Real(j, work), -sw);
    Real rN(N, work);
    Complex Npow = pow_real_base(rN, 1L - sw);  // N^{1-s}
    acc += Npow / (sw - 1L);
    Complex Nms = Npow / rN;  // N^{-s}
    acc += Nms / 2L;
    // tail: sum_k B_2k/(2k)! (s)_{2k-1} N^{-s-2k+1}
    Complex poch = sw;              // (s)_{2k-1} running product
    Complex npow = Nms * rN;        // N^{-s-2k+1}, starts at N^{1-s}
    Real nfac(1L, work);            // (2k)!
    bool ok = false;
    for (long k = 1; k < 600; ++k) {
      npow = npow / (rN * rN);
      nfac *= (2 * k - 1) * 2 * k;
      if (k > 1) poch = poch * (sw + (2 * k - 3)) * (sw + (2 * k - 2));
      BigRat b2k = bernoulli_number(static_cast<unsigned long>(2 * k));
      Complex term = Complex(Real::from_rational(b2k.get_mpq_t(), work)) * poch * npow / nfac;
      acc += term;
      // remainder bound: |next term| * |s+2k+1| / (Re s + 2k + 1)
      Real bound = abs(term) * (abs(sw + (2 * k + 1)) / (sw.re() + (2 * k + 1)));
      if (bound < tol) {
        ok = true;
        break;
      }
      if (abs(term) > Real(1e30, 64)) break;  // diverging: N too small
    }
    if (ok) return acc.with_prec(prec);
    N *= 2;
  }
  throw std::runtime_error("euler-maclaurin zeta did not reach tolerance");
}

}  // namespace

Complex zeta_reference(const Complex& s, const ZetaOracleConfig& cfg) {
  if (s.im().is_zero() && s.re() == 1L) throw std::domain_error("pole of zeta");
  switch (cfg.method) {
    case ZetaMethod::alternating_accelerated:
      return zeta_borwein(s, cfg.precision, cfg.terms);
    case ZetaMethod::euler_maclaurin:
      return zeta_euler_maclaurin(s, cfg.precision, cfg.terms);
  }
  throw std::logic_error("unknown zeta method");
}

namespace {

std::mutex zint_mutex;
std::map<long, Real> zint_cache;

Real zeta_int_direct(long k, mpfr_prec_t work) {
  // Dirichlet series truncated at N with N^{1-k}/(k-1) below the target;
  // only used when that N is small.
  long logN = static_cast<long>(static_cast<double>(work + 8) / static_cast<double>(k - 1)) + 1;
  long N = (1L << std::min<long>(logN, 30)) + 2;
  Real acc(work);
  mpfr_set_ui(acc.raw(), 0, MPFR_RNDN);
  Real p(work);
  for (long n = N; n >= 2; --n) {  // small terms first
    mpfr_ui_pow_ui(p.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k),
                   MPFR_RNDN);
    mpfr_ui_div(p.raw(), 1, p.raw(), MPFR_RNDN);
    acc += p;
  }
  return acc + 1L;
}

}  // namespace

Real zeta_int(long k, mpfr_prec_t prec) {
  if (k < 2) throw std::domain_error("zeta_int requires k >= 2");
  {
    std::lock_guard<std::mutex> lock(zint_mutex);
    auto it = zint_cache.find(k);
    if (it != zint_cache.end() && it->second.prec() >= prec) {
      return it->second.with_prec(prec);
    }
  }
  mpfr_prec_t work = prec + 16;
  Real v(2);
  if ((work + 8) / (k - 1) + 1 <= 10) {
    v = zeta_int_direct(k, work).with_prec(prec);
  } else {
    v = zeta_borwein(Complex(Real(k, work)), prec, 0).re();
  }
  std::lock_guard<std::mutex> lock(zint_mutex);
  auto it = zint_cache.find(k);
  if (it == zint_cache.end() || it->second.prec() < v.prec()) {
    zint_cache.insert_or_assign(k, v);
  }
  return v.with_prec(prec);
}

}  // namespace zetasum
