#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lgid/errors.hpp"
#include "lgid/specfun.hpp"

namespace lgid {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int kProductTerms = 200;

// log1p(y) - y + y^2/2 without cancellation for small y
double log1p_tail3(double y) {
    if (std::fabs(y) > 0.1) return std::log1p(y) - y + 0.5 * y * y;
    double t = y * y * y, s = 0.0;
    for (int k = 3; k < 40; ++k) {
        double term = t / k;
        s += (k % 2) ? term : -term;
        if (std::fabs(term) < 1e-20 * std::fabs(s)) break;
        t *= y;
    }
    return s;
}

// log G(1+z) for 0 <= z <= 9 from the Weierstrass product.
ValueWithError log_g1p(double z) {
    const Constants& k = constants();
    double v = 0.5 * z * k.log_two_pi.value - 0.5 * (z + (1.0 + k.euler_gamma.value) * z * z);
    double head = 0.0;
    for (int n = kProductTerms; n >= 1; --n) head += n * log1p_tail3(z / n);

    // Tail n > 200: each term equals sum_{k>=3} (-1)^(k+1) z^k/(k n^(k-1)).
    // Euler-Maclaurin with that expansion; the integral and derivatives
    // are taken term by term.
    const double N = kProductTerms + 1;
    double integral = 0.0, half = 0.0, corr = 0.0, next = 0.0;
    double zk = z * z * z;
    for (int kk = 3; kk < 60; ++kk) {
        double c = ((kk % 2) ? 1.0 : -1.0) * zk / kk;
        double e = kk - 1;  // term is c u^-e
        if (std::fabs(c) * std::pow(N, -e) < 1e-22) break;
        integral += c * std::pow(N, 1.0 - e) / (e - 1.0);
        half += 0.5 * c * std::pow(N, -e);
        // m-th derivative of u^-e is (-1)^m e (e+1) ... (e+m-1) u^(-e-m)
        double rising = 1.0, fact = 1.0;
        for (int m = 1; m <= 9; ++m) {
            rising *= (e + m - 1);
            fact *= m;
            if (m % 2 == 1) {
                double deriv = -rising * std::pow(N, -e - m);
                double term = bernoulli_number(m + 1) / (fact * (m + 1)) * c * deriv;
                if (m <= 7)
                    corr += term;
                else
                    next += std::fabs(term);
            }
        }
        zk *= z;
    }
    double tail = integral + half - corr;
    double val = v + head + tail;
    double err = next + 8 * eps * (std::fabs(v) + kProductTerms * std::fabs(z) * 1e-2 + std::fabs(head)) +
                 z * z * (k.euler_gamma.err_bound + k.log_two_pi.err_bound);
    return {val, err};
}

}  // namespace

ValueWithError log_barnes_g(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw domain_error("log_barnes_g: argument must be positive");
    if (x > 10.0) throw domain_error("log_barnes_g: argument above 10 is outside the supported range");
    if (x >= 1.0) return log_g1p(x - 1.0);
    // G(x) = G(1+x)/Gamma(x)
    return log_g1p(x) - log_gamma(x);
}

ValueWithError dilog(double x) {
    if (!std::isfinite(x) || x > 1.0) throw domain_error("dilog: argument must be <= 1");
    const double z2 = num::zeta2;
    if (x == 1.0) return exact(z2);
    if (x < -1.0) {
        double l = std::log(-x);
        ValueWithError r = dilog(1.0 / x);
        return {-z2 - 0.5 * l * l - r.value, r.err_bound + 4 * eps * (z2 + l * l)};
    }
    if (x > 0.5) {
        ValueWithError r = dilog(1.0 - x);
        double t = std::log(x) * std::log1p(-x);
        return {z2 - t - r.value, r.err_bound + 4 * eps * (z2 + std::fabs(t))};
    }
    // Li2(x) = sum B_n u^(n+1)/(n+1)! with u = -log(1-x), |u| <= log 2
    double u = -std::log1p(-x);
    double term = u, s = 0.0;  // u^(n+1)/(n+1)!
    for (int n = 0; n <= 20; ++n) {
        s += bernoulli_number(n) * term;
        term *= u / (n + 2);
    }
    return {s, 4 * eps * std::fabs(s) + 1e-300};
}

ValueWithError phi_rational(long p, long q) {
    if (p < 1 || q < 2) throw argument_error("phi_rational: need p >= 1 and q >= 2");
    if (std::gcd(p, q) != 1) throw argument_error("phi_rational: p and q must be coprime");
    // With p = 1 the defining series hits (an)^2 = 1 at n = q.
    if (p == 1) throw argument_error("phi_rational: the defining series has a zero denominator for p = 1");
    double s = 0.0, abs_s = 0.0;
    for (long j = 1; 2 * j < p; ++j) {
        double t = std::cos(num::two_pi * double((q * j) % p) / double(p)) * std::log(sinpi(double(j) / double(p)));
        s += t;
        abs_s += std::fabs(t);
    }
    double first = (2.0 * q / p) * (std::log(2.0 * p) - 2.0 * s);
    double second = 0.0;
    for (long j = 1; j <= q / p; ++j) second += 1.0 / double(p * j - q);
    second *= 2.0 * q;
    double v = first + second;
    return {v, 8 * eps * ((2.0 * q / p) * (std::log(2.0 * p) + 2 * abs_s) + std::fabs(second))};
}

}  // namespace lgid
