#ifndef ZETASUM_NUMCORE_HPP
#define ZETASUM_NUMCORE_HPP

#include <gmpxx.h>

#include <string>

namespace zetasum {

using BigInt = mpz_class;
using BigRat = mpq_class;

// C(m,k); returns 0 for k > m.
BigInt binomial(unsigned long m, unsigned long k);

// Bernoulli number B_k from the recurrence sum_{j<=n} C(n+1,j) B_j = 0,
// which fixes B_1 = -1/2. Values are cached in a monotone table.
BigRat bernoulli_number(unsigned long k);

// Euler number E_n in the secant convention (sech series coefficients):
// E_0 = 1, E_2 = -1, E_4 = 5, sign (-1)^{n/2}. Throws for odd n.
BigInt euler_number(unsigned long n);

// H_m = sum_{k=1}^m 1/k as an exact rational.
BigRat harmonic_number(unsigned long m);

std::string rat_to_string(const BigRat& q);

enum class OpKind { coefficient_sum, quadrature, evaluation };

// Working-precision schedule. Coefficient sums at index m suffer ~3^m
// cancellation (log2(3) = 1.585 bits per index), so the guard grows with m;
// the +64 absorbs quadrature and rounding noise.
struct PrecisionPolicy {
  long target_bits = 128;

  long working_bits(long m, OpKind kind = OpKind::coefficient_sum) const {
    long guard = 0;
    switch (kind) {
      case OpKind::coefficient_sum:
        guard = static_cast<long>(1.6 * static_cast<double>(m < 0 ? 0 : m)) + 1 + 64;
        break;
      case OpKind::quadrature:
        guard = 64;
        break;
      case OpKind::evaluation:
        guard = 32;
        break;
    }
    return target_bits + guard;
  }
};

}  // namespace zetasum

#endif
