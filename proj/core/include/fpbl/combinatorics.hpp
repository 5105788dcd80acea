#pragma once

#include <cstddef>
#include <vector>

#include "fpbl/arith.hpp"

namespace fpbl {

/// C_0..C_{n_max} from C_{n+1} = sum_i C_i C_{n-i}. Quadratic; this is the
/// independent reference used to check the series engine.
std::vector<BigInt> catalan_by_convolution(std::size_t n_max);

/// C_n = binom(2n, n) / (n + 1).
BigInt catalan(std::size_t n);

/// D_0..D_{n_max} from D_0 = 1, D_1 = 0, D_n = (n-1)(D_{n-1} + D_{n-2}).
std::vector<BigInt> derangement_numbers(std::size_t n_max);

BigInt binomial(std::size_t n, std::size_t k);
BigInt factorial(std::size_t n);

/// Falling factorial (x)_m = x (x-1) ... (x-m+1).
BigInt falling_factorial(long x, unsigned m);

}  // namespace fpbl
