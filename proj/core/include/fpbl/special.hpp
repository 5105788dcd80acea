#pragma once

namespace fpbl {

// Error function and normal cdf via the Cephes rational approximations
// (S. L. Moshier): erf on |x| <= 1 as x T(x^2)/U(x^2), erfc above as
// exp(-x^2) P(x)/Q(x) for x < 8 and exp(-x^2) R(x)/S(x) beyond. Absolute
// error is below 1e-15 everywhere; the tests bound it by 1e-12 against MPFR.
double erf_approx(double x);
double erfc_approx(double x);

/// Standard normal cdf, computed from erfc on the far side to avoid cancellation.
double normal_cdf(double x);

/// Gamma function. Integer and half-integer arguments are exact products
/// (times sqrt(pi)); everything else uses the Lanczos approximation with
/// g = 7, n = 9 and reflection for x < 1/2.
double gamma_fn(double x);

}  // namespace fpbl
