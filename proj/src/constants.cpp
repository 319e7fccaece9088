#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

#include "lgid/constants.hpp"
#include "lgid/specfun.hpp"

namespace lgid {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// sum_{n>=1} log(n)^p / n^s by Euler-Maclaurin: explicit head below N,
// integral tail, half term and corrections through B_8.
ValueWithError log_power_sum(int p, double s, int N) {
    double head = 0.0;
    for (int n = N - 1; n >= 2; --n) head += std::pow(std::log(double(n)), p) * std::pow(double(n), -s);

    const double L = std::log(double(N));
    // int_N^inf log^p t t^-s dt = N^(1-s) sum_i p!/(p-i)! L^(p-i)/(s-1)^(i+1)
    double integral = 0.0, fall = 1.0;
    for (int i = 0; i <= p; ++i) {
        integral += fall * std::pow(L, p - i) / std::pow(s - 1.0, i + 1);
        fall *= (p - i);
    }
    integral *= std::pow(double(N), 1.0 - s);

    // m-th derivative of log^p t t^-s is t^(-s-m) * c(log t) with c a
    // polynomial; differentiate the coefficient vector.
    std::vector<double> c(p + 1, 0.0);
    c[p] = 1.0;
    auto eval = [&](int m) {
        double v = 0.0;
        for (int i = p; i >= 0; --i) v = v * L + c[i];
        return v * std::pow(double(N), -s - m);
    };
    double half = 0.5 * eval(0);
    double corr = 0.0, next = 0.0, fact = 1.0;
    for (int m = 1; m <= 9; ++m) {
        std::vector<double> d(p + 1, 0.0);
        for (int i = 0; i <= p; ++i) {
            d[i] += (-s - (m - 1)) * c[i];
            if (i > 0) d[i - 1] += i * c[i];
        }
        c = d;
        fact *= m;
        if (m % 2 == 1) {
            double b = bernoulli_number(m + 1) / (fact * (m + 1));
            double term = b * eval(m);
            if (m <= 7)
                corr += term;
            else
                next = std::fabs(term);
        }
    }
    double v = head + integral + half - corr;
    return {v, next + 8 * eps * std::fabs(v) * std::log(double(N))};
}

// Cohen-Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k.
template <class F>
double cvz_alternating(F a, int n) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d, s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

Constants compute() {
    Constants k;

    // gamma = H_n - log n - 1/(2n) + sum_k B_2k/(2k n^2k) at n = 1e6
    {
        const long n = 1000000;
        double h = harmonic(n, 1, 1.0);
        double dn = double(n);
        double c = -0.5 / dn;
        double in2 = 1.0 / (dn * dn), p = in2;
        for (int j = 1; j <= 4; ++j) {
            c += bernoulli_number(2 * j) / (2.0 * j) * p;
            p *= in2;
        }
        double g = h - std::log(dn) + c;
        k.euler_gamma = {g, 4 * eps * h};
    }

    // zeta'(2) = -sum log n/n^2, zeta''(2) = sum log^2 n/n^2
    {
        ValueWithError s1 = log_power_sum(1, 2.0, 200);
        ValueWithError s2 = log_power_sum(2, 2.0, 200);
        k.zeta_prime_2 = -s1;
        k.zeta_dprime_2 = s2;
    }

    // zeta(3) by the same scheme with p = 0
    {
        ValueWithError z = log_power_sum(0, 3.0, 200);
        k.zeta3 = z + 1.0;  // the helper starts its head at n = 2
    }

    // Catalan G = sum (-1)^k/(2k+1)^2
    {
        double g = cvz_alternating([](int j) { return 1.0 / ((2.0 * j + 1) * (2.0 * j + 1)); }, 40);
        k.catalan = {g, 4 * eps};
    }

    k.log_two_pi = exact(std::log(num::two_pi));

    // zeta'(-1) from the functional equation at s = 2, then log A = 1/12 - zeta'(-1)
    {
        double pi2 = num::pi * num::pi;
        ValueWithError zm1 = (1.0 - k.euler_gamma - k.log_two_pi) / 12.0 + k.zeta_prime_2 / (2.0 * pi2);
        k.zeta_prime_m1 = zm1;
        k.log_glaisher = 1.0 / 12.0 - zm1;
    }
    return k;
}

}  // namespace

const Constants& constants() {
    static Constants value;
    static std::once_flag once;
    std::call_once(once, [] { value = compute(); });
    return value;
}

}  // namespace lgid
