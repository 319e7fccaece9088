#include <cmath>
#include <limits>
#include <string>

#include "lgid/errors.hpp"
#include "lgid/quadrature.hpp"
#include "lgid/specfun.hpp"

namespace lgid {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int kExplicitTerms = 25;
constexpr int kCorrections = 8;  // B_2 .. B_16

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// One Euler-Maclaurin correction term and its first two s-derivatives.
// P(s) = s (s+1) ... (s+2j-2), E(s) = X^(-s-2j+1).
struct Rising {
    double p[3] = {1.0, 0.0, 0.0};
    void times(double f) {  // multiply by (s + c) where f = s + c
        p[2] = p[2] * f + 2.0 * p[1];
        p[1] = p[1] * f + p[0];
        p[0] *= f;
    }
};

// Hermite's integral, used for s < 0 where Euler-Maclaurin cancels badly:
// zeta(s,a) = a^-s/2 + a^(1-s)/(s-1) + 2 int_0^inf sin(s atan(t/a)) (a^2+t^2)^(-s/2) / (e^(2 pi t) - 1) dt
ValueWithError hermite(int k, double s, double a) {
    const double la = std::log(a);
    const double u = s - 1.0;
    double closed = 0.5 * std::pow(-la, k) * std::pow(a, -s);
    double pole = 0.0;
    for (int i = 0; i <= k; ++i)
        pole += binom(k, i) * std::pow(-la, k - i) * ((i % 2) ? -1.0 : 1.0) * factorial(i) / std::pow(u, i + 1);
    pole *= std::pow(a, -u);

    auto integrand = [=](double t) {
        if (t < 1e-100) {
            double base = std::pow(a, -s) / (num::two_pi * a);
            if (k == 0) return s * base;
            if (k == 1) return (1.0 - s * la) * base;
            return (-2.0 * la + s * la * la) * base;
        }
        double th = std::atan2(t, a);
        double lr = 0.5 * std::log(a * a + t * t);
        double sn = std::sin(s * th), cs = std::cos(s * th);
        double core;
        if (k == 0)
            core = sn;
        else if (k == 1)
            core = th * cs - lr * sn;
        else
            core = -th * th * sn - 2.0 * th * lr * cs + lr * lr * sn;
        return core * std::exp(-s * lr) / std::expm1(num::two_pi * t);
    };
    // scale of the largest contribution, used to set a relative target
    double mag = std::fabs(closed) + std::fabs(pole) + std::exp(std::lgamma(1.0 - s)) * std::pow(num::two_pi, s - 1.0) *
                                                         std::pow(1.0 + std::fabs(std::log(1.0 - s)) + std::fabs(la), k);
    IntegrandSpec spec;
    spec.evaluator = integrand;
    spec.domain = Domain::semi_infinite;
    spec.a = 0.0;
    spec.target_abs_tol = 1e-15 * std::max(1.0, mag);
    ValueWithError in = integrate_semi_infinite(spec);
    double v = closed + pole + 2.0 * in.value;
    return {v, 2.0 * in.err_bound + 4 * eps * (std::fabs(closed) + std::fabs(pole) + 2.0 * std::fabs(in.value))};
}

// Hurwitz's Fourier series, used for s <= -6 where it converges like n^(s-1):
// zeta(s,a) = 2 Gamma(1-s) (2 pi)^(s-1) sum sin(2 pi n a + pi s/2) n^(s-1), 0 < a <= 1.
ValueWithError hurwitz_fourier(int k, double s, double a) {
    double m = std::ceil(a) - 1.0;
    double fa = a - m;  // in (0, 1]
    double F[3] = {0.0, 0.0, 0.0};
    double absF = 0.0;
    for (int n = 1; n < 100000; ++n) {
        double ln = std::log(double(n));
        double p = std::exp((s - 1.0) * ln);
        double arg = 2.0 * std::fmod(n * fa, 1.0) + 0.5 * s;  // in units of pi
        double sn = sinpi(arg), cs = cospi(arg);
        F[0] += sn * p;
        F[1] += (num::half_pi * cs + ln * sn) * p;
        F[2] += (-num::half_pi * num::half_pi * sn + num::pi * ln * cs + ln * ln * sn) * p;
        absF += p * (1.0 + ln) * (1.0 + ln);
        if (p * (1.0 + ln) * (1.0 + ln) < 1e-18 * std::fabs(F[0]) || p < 1e-300) break;
    }
    double P = 2.0 * std::exp(log_gamma(1.0 - s).value + (s - 1.0) * std::log(num::two_pi));
    double l = std::log(num::two_pi) - digamma(1.0 - s).value;
    double v;
    if (k == 0)
        v = P * F[0];
    else if (k == 1)
        v = P * (l * F[0] + F[1]);
    else
        v = P * ((l * l + polygamma(1, 1.0 - s).value) * F[0] + 2.0 * l * F[1] + F[2]);
    // relative error of the prefactor grows with |s| through exp(log Gamma)
    double e = 64 * eps * (1.0 + std::fabs(s)) * std::fabs(P) * absF * std::pow(1.0 + std::fabs(l), k);
    // restore a > 1: zeta(s, a) = zeta(s, fa) - sum_{j<m} (fa + j)^-s
    double sub = 0.0, abs_sub = 0.0;
    for (int j = 0; j < int(m); ++j) {
        double x = fa + j;
        double t = std::pow(-std::log(x), k) * std::pow(x, -s);
        sub += t;
        abs_sub += std::fabs(t);
    }
    return {v - sub, e + 4 * eps * abs_sub};
}

}  // namespace

ValueWithError hurwitz_zeta_deriv(int k, double s, double a) {
    if (k < 0 || k > 2) throw domain_error("hurwitz_zeta_deriv: derivative order must be 0, 1 or 2");
    if (!(a > 0.0) || !std::isfinite(a) || !std::isfinite(s)) throw domain_error("hurwitz_zeta: need finite s and a > 0");
    if (s == 1.0) throw pole_error("hurwitz_zeta: pole at s = 1");
    if (s <= -6.0) return hurwitz_fourier(k, s, a);
    if (s < 0.0) {
        if (a >= 1.0) return hermite(k, s, a);
        // zeta(s, a) = a^-s + zeta(s, a+1)
        double t = std::pow(-std::log(a), k) * std::pow(a, -s);
        return hermite(k, s, a + 1.0) + ValueWithError{t, 4 * eps * std::fabs(t)};
    }

    const int N = kExplicitTerms;
    double head = 0.0, comp = 0.0, abs_head = 0.0;
    for (int n = N - 1; n >= 0; --n) {
        double x = n + a;
        double lx = std::log(x);
        double t = std::pow(x, -s);
        if (k >= 1) t *= -lx;
        if (k == 2) t *= -lx;
        double sum = head + t;
        if (std::fabs(head) >= std::fabs(t))
            comp += (head - sum) + t;
        else
            comp += (t - sum) + head;
        head = sum;
        abs_head += std::fabs(t);
    }

    const double X = N + a;
    const double L = std::log(X);
    const double u = s - 1.0;
    const double Xu = std::pow(X, -u);

    // d^k/ds^k of X^(1-s)/(s-1)
    double integral = 0.0;
    for (int i = 0; i <= k; ++i) {
        double term = binom(k, i) * std::pow(-L, k - i) * ((i % 2) ? -1.0 : 1.0) * factorial(i) / std::pow(u, i + 1);
        integral += term;
    }
    integral *= Xu;

    double half = 0.5 * std::pow(-L, k) * std::pow(X, -s);

    double corr = 0.0, last = 0.0;
    Rising P;
    P.times(s);  // P_1 = s
    double E = std::pow(X, -s - 1.0);
    double iX2 = 1.0 / (X * X);
    for (int j = 1; j <= kCorrections + 1; ++j) {
        double d = 0.0;
        for (int i = 0; i <= k; ++i) d += binom(k, i) * P.p[i] * std::pow(-L, k - i);
        double term = bernoulli_number(2 * j) / factorial(2 * j) * d * E;
        if (j <= kCorrections)
            corr += term;
        else
            last = std::fabs(term);
        P.times(s + 2.0 * j - 1.0);
        P.times(s + 2.0 * j);
        E *= iX2;
    }

    double v = (head + comp) + integral + half + corr;
    double e = last + 4 * eps * (abs_head + std::fabs(integral) + std::fabs(half) + std::fabs(corr));
    return {v, e};
}

ValueWithError hurwitz_zeta(double s, double a) { return hurwitz_zeta_deriv(0, s, a); }

ValueWithError hurwitz_zeta_sderiv(double s, double a) { return hurwitz_zeta_deriv(1, s, a); }

ValueWithError riemann_zeta_deriv(int k, double s) {
    if (k < 0 || k > 2) throw domain_error("riemann_zeta_deriv: order must be 0, 1 or 2");
    return hurwitz_zeta_deriv(k, s, 1.0);
}

}  // namespace lgid
