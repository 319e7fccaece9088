#pragma once

#include <cstdint>

#include "lgid/constants.hpp"
#include "lgid/value.hpp"

namespace lgid {

// Sine and cosine integrals. Si(x) = int_0^x sin t/t, si = Si - pi/2,
// Ci(x) = gamma + log x + int_0^x (cos t - 1)/t.
ValueWithError sin_integral_Si(double x);
ValueWithError cos_integral_Ci(double x);
ValueWithError si_lower(double x);

// Auxiliary functions f = -cos x si + sin x Ci, g = -cos x Ci - sin x si.
ValueWithError aux_f(double x);
ValueWithError aux_g(double x);

// Both integrals at once; cheaper when a caller needs the pair.
struct SiCi {
    ValueWithError si;   // Si(x)
    ValueWithError ci;   // Ci(x)
};
SiCi sici(double x);

ValueWithError log_gamma(double x);
ValueWithError digamma(double x);
ValueWithError polygamma(int m, double x);

// sum_{j=0}^{n-1} (a+j)^-m, smallest terms first
double harmonic(std::int64_t n, int m, double a);

ValueWithError hurwitz_zeta(double s, double a);
ValueWithError hurwitz_zeta_sderiv(double s, double a);
// k-th derivative in s for k in {0,1,2}
ValueWithError hurwitz_zeta_deriv(int k, double s, double a);
ValueWithError riemann_zeta_deriv(int k, double s);

double bernoulli_poly(int n, double x);
double bernoulli_number(int n);

ValueWithError log_barnes_g(double x);
ValueWithError dilog(double x);
ValueWithError phi_rational(long p, long q);

// sin(pi x) and cos(pi x) with exact argument reduction.
double sinpi(double x);
double cospi(double x);

}  // namespace lgid
