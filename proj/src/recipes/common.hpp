#pragma once

// Shared building blocks for the catalog recipes.

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lgid/catalog.hpp"
#include "lgid/constants.hpp"
#include "lgid/quadrature.hpp"
#include "lgid/series_engine.hpp"
#include "lgid/specfun.hpp"
#include "lgid/value.hpp"

namespace lgid::recipes {

using V = ValueWithError;
using P = ParamPoint;
using num::pi;
using num::two_pi;

inline constexpr double kQuadTol = 1e-12;

inline double real_param(const P& p, const char* name) { return param(p, name); }
inline int int_param(const P& p, const char* name) { return static_cast<int>(std::lround(param(p, name))); }

void add(RecipeRegistry& r, const std::string& id, SideFn lhs, SideFn rhs);

void register_section1(RecipeRegistry& r);
void register_section2(RecipeRegistry& r);
void register_section3(RecipeRegistry& r);
void register_section4_5(RecipeRegistry& r);
void register_section6_appendix(RecipeRegistry& r);

// Constants
inline V euler() { return constants().euler_gamma; }
inline V log_a() { return constants().log_glaisher; }
inline V log2pi() { return constants().log_two_pi; }
inline V zeta3() { return constants().zeta3; }
inline V zp2() { return constants().zeta_prime_2; }
inline V zpp2() { return constants().zeta_dprime_2; }
inline V catalan() { return constants().catalan; }
inline V zeta_prime_m1() { return constants().zeta_prime_m1; }
inline V ln2() { return exact(num::ln2); }

// Plain-double integrand helpers
inline double lg(double x) { return log_gamma(x).value; }
inline double psi(double x) { return digamma(x).value; }
inline double log_sin_pi(double x) { return std::log(sinpi(x)); }

// Odd harmonic sum sum_{j=0}^{k-1} 1/(2j+1)
double odd_harmonic(int k);

// Quadrature
V quad(std::function<double(double)> f, double a = 0.0, double b = 1.0, unsigned hints = none, double tol = kQuadTol);
// Sum of quadratures over consecutive breakpoints.
V quad_pieces(const std::function<double(double)>& f, const std::vector<double>& pts, double tol = kQuadTol);
V quad_inf(std::function<double(double)> f, double a = 0.0, double tol = kQuadTol);

// Series helpers
V sum_em(std::function<double(std::int64_t)> term, std::function<SeriesJet(const SeriesJet&)> ext);
V sum_direct(std::function<double(std::int64_t)> term, double decay);
V sum_alternating(std::function<double(std::int64_t)> term);

// sum 1/(n^e (c n^2 - q)), with 1/(c n^2 - q) expanded for the lattice tails
LatticeWeight inv_quadratic_weight(double c, double q, int e);

// sum 1/(n (4n^2 - p^2)) and sum 1/(4n^2 - p^2) by Euler-Maclaurin
V w1(double p);
V w0(double p);
// sum log n / (4n^2 - p^2) by the series engine
inline V lsum(double p) { return sum_log_weighted(p, false); }

// sum_n w(n) [cf trig_f(n theta) f(n X) + cg trig_g(n theta) g(n X)] with the
// auxiliary functions f, g of the sine/cosine integrals; weights are n^-e.
struct FourierAuxTerm {
    bool use_g;    // g instead of f
    bool use_sin;  // sin(n theta) instead of cos
    double coef;
};
V fourier_aux_sum(double theta, double X, const std::vector<FourierAuxTerm>& parts, int e, int head = 64);

// sum_{n>=1} h(n) trig(2 pi n u/v) by grouping full periods into smooth
// block sums that are summed by Euler-Maclaurin. x = u/v must be rational
// with v <= 64. h is supplied as a jet function.
V periodic_sum(double x, bool use_sin, const std::function<SeriesJet(const SeriesJet&)>& h);

// Richardson-paired limit of R at p0: symmetric means at p0 +- delta and
// p0 +- delta/2 combined to cancel the delta^2 term.
V paired_limit(const std::function<V(double)>& R, double p0, double delta = 1e-4);

// Digamma as a jet through its asymptotic expansion; requires value >= 50.
SeriesJet digamma_jet(const SeriesJet& z);

}  // namespace lgid::recipes
