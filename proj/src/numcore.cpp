#include "zetasum/numcore.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace zetasum {

BigInt binomial(unsigned long m, unsigned long k) {
  if (k > m) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), m, k);
  return r;
}

namespace {

std::mutex bern_mutex;
std::vector<BigRat> bern_table;  // B_0, B_1, ...

void grow_bernoulli(unsigned long k) {
  if (bern_table.empty()) {
    bern_table.emplace_back(1);             // B_0
    bern_table.emplace_back(BigRat(-1, 2)); // B_1
  }
  while (bern_table.size() <= k) {
    unsigned long n = bern_table.size();
    // sum_{j=0}^{n} C(n+1,j) B_j = 0  =>  B_n = -(1/C(n+1,n)) sum_{j<n} ...
    BigRat acc(0);
    for (unsigned long j = 0; j < n; ++j) {
      acc += BigRat(binomial(n + 1, j)) * bern_table[j];
    }
    acc /= BigRat(binomial(n + 1, n));
    bern_table.push_back(-acc);
  }
}

std::mutex euler_mutex;
std::vector<BigInt> secant_table;  // |E_0|, |E_2|, |E_4|, ...

// Boustrophedon (zigzag) triangle; row 2n ends in the secant number |E_2n|.
void grow_secant(unsigned long half) {
  static std::vector<BigInt> row = {BigInt(1)};
  static unsigned long rows_done = 0;  // index of last computed triangle row
  while (secant_table.size() <= half) {
    if (secant_table.empty()) {
      secant_table.emplace_back(1);
      continue;
    }
    unsigned long target_row = 2 * secant_table.size();
    while (rows_done < target_row) {
      unsigned long n = rows_done + 1;
      std::vector<BigInt> next(n + 1);
      next[0] = 0;
      for (unsigned long i = 1; i <= n; ++i) next[i] = next[i - 1] + row[n - i];
      row.swap(next);
      ++rows_done;
    }
    secant_table.push_back(row.back());
  }
}

}  // namespace

BigRat bernoulli_number(unsigned long k) {
  std::lock_guard<std::mutex> lock(bern_mutex);
  grow_bernoulli(k);
  return bern_table[k];
}

BigInt euler_number(unsigned long n) {
  if (n % 2 != 0) throw std::domain_error("odd Euler index");
  std::lock_guard<std::mutex> lock(euler_mutex);
  unsigned long half = n / 2;
  grow_secant(half);
  BigInt e = secant_table[half];
  if (half % 2 == 1) e = -e;
  return e;
}

BigRat harmonic_number(unsigned long m) {
  BigRat h(0);
  for (unsigned long k = 1; k <= m; ++k) h += BigRat(1, k);
  return h;
}

std::string rat_to_string(const BigRat& q) {
  return q.get_str(10);
}

}  // namespace zetasum
