#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "lgid/errors.hpp"
#include "lgid/specfun.hpp"

namespace lgid {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// B_0 .. B_20 as exact ratios.
constexpr long long kBernNum[21] = {1, -1, 1, 0, -1, 0, 1, 0, -1, 0, 5, 0, -691, 0, 7, 0, -3617, 0, 43867, 0, -174611};
constexpr long long kBernDen[21] = {1, 2, 6, 1, 30, 1, 42, 1, 30, 1, 66, 1, 2730, 1, 6, 1, 510, 1, 798, 1, 330};

void require_positive(double x, const char* who) {
    if (!(x > 0.0) || !std::isfinite(x)) throw domain_error(std::string(who) + ": argument must be positive and finite");
}

}  // namespace

double bernoulli_number(int n) {
    if (n < 0 || n > 20) throw unsupported_degree("bernoulli_number: index out of table");
    return double(kBernNum[n]) / double(kBernDen[n]);
}

double bernoulli_poly(int n, double x) {
    if (n < 0) throw unsupported_degree("bernoulli_poly: negative degree");
    if (n > 12) throw unsupported_degree("bernoulli_poly: degree above 12");
    // Coefficient of x^(n-k) is C(n,k) B_k, an exact ratio; Horner in x.
    long long binom = 1;
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        long long num = binom * kBernNum[k];
        acc = acc * x + double(num) / double(kBernDen[k]);
        binom = binom * (n - k) / (k + 1);
    }
    return acc;
}

ValueWithError log_gamma(double x) {
    require_positive(x, "log_gamma");
    double z = x;
    double prod = 1.0;
    double shift_log = 0.0;
    while (z < 10.0) {
        prod *= z;
        z += 1.0;
    }
    if (prod != 1.0) shift_log = std::log(prod);
    // Stirling series through B_16.
    double iz = 1.0 / z, iz2 = iz * iz;
    double corr = 0.0, p = iz;
    for (int j = 1; j <= 8; ++j) {
        corr += bernoulli_number(2 * j) / (2.0 * j * (2.0 * j - 1)) * p;
        p *= iz2;
    }
    double lz = std::log(z);
    double a = (z - 0.5) * lz;
    double v = a - z + 0.5 * std::log(num::two_pi) + corr - shift_log;
    double e = 3 * eps * (std::fabs(a) + z + std::fabs(shift_log) + 1.0) + 1e-18;
    return {v, e};
}

ValueWithError digamma(double x) {
    require_positive(x, "digamma");
    double z = x, acc = 0.0, abs_acc = 0.0;
    while (z < 10.0) {
        acc -= 1.0 / z;
        abs_acc += 1.0 / z;
        z += 1.0;
    }
    double iz2 = 1.0 / (z * z), p = iz2, s = 0.0;
    for (int k = 1; k <= 8; ++k) {
        s += bernoulli_number(2 * k) / (2.0 * k) * p;
        p *= iz2;
    }
    double lz = std::log(z);
    double v = lz - 0.5 / z - s + acc;
    return {v, 3 * eps * (std::fabs(lz) + abs_acc + 1.0)};
}

ValueWithError polygamma(int m, double x) {
    if (m == 0) return digamma(x);
    if (m < 1 || m > 3) throw domain_error("polygamma: order must be in {1,2,3}");
    require_positive(x, "polygamma");
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^(m+1)
    double z = x, head = 0.0;
    while (z < 15.0) {
        head += std::pow(z, -(m + 1));
        z += 1.0;
    }
    // (m-1)!/z^m + m!/(2 z^(m+1)) + sum_k B_2k (2k+m-1)!/((2k)! z^(2k+m))
    double tail = (fact / m) / std::pow(z, m) + fact / (2.0 * std::pow(z, m + 1));
    double ratio = fact * (m + 1) / 2.0;  // (2k+m-1)!/(2k)! at k = 1
    double p = std::pow(z, -(m + 2));
    double iz2 = 1.0 / (z * z);
    for (int k = 1; k <= 10; ++k) {
        tail += bernoulli_number(2 * k) * ratio * p;
        ratio *= double(2 * k + m) * double(2 * k + m + 1) / (double(2 * k + 1) * double(2 * k + 2));
        p *= iz2;
    }
    double v = sign * (fact * head + tail);
    return {v, 4 * eps * std::fabs(v)};
}

double harmonic(std::int64_t n, int m, double a) {
    double sum = 0.0, c = 0.0;
    for (std::int64_t j = n - 1; j >= 0; --j) {
        double t = std::pow(a + double(j), -m);
        double s = sum + t;
        if (std::fabs(sum) >= std::fabs(t))
            c += (sum - s) + t;
        else
            c += (t - s) + sum;
        sum = s;
    }
    return sum + c;
}

}  // namespace lgid
