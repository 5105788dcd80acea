#include "fpbl/combinatorics.hpp"

namespace fpbl {

std::vector<BigInt> catalan_by_convolution(std::size_t n_max) {
  std::vector<BigInt> c(n_max + 1);
  c[0] = 1;
  for (std::size_t n = 0; n < n_max; ++n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), c[n - i].get_mpz_t());
    c[n + 1] = acc;
  }
  return c;
}

BigInt catalan(std::size_t n) {
  BigInt c = binomial(2 * n, n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1);
  return c;
}

std::vector<BigInt> derangement_numbers(std::size_t n_max) {
  std::vector<BigInt> d(n_max + 1);
  d[0] = 1;
  if (n_max >= 1) d[1] = 0;
  for (std::size_t n = 2; n <= n_max; ++n) d[n] = BigInt(static_cast<unsigned long>(n - 1)) * (d[n - 1] + d[n - 2]);
  return d;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(std::size_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt falling_factorial(long x, unsigned m) {
  BigInt out = 1;
  for (unsigned i = 0; i < m; ++i) out *= x - static_cast<long>(i);
  return out;
}

}  // namespace fpbl
