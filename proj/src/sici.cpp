#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "lgid/errors.hpp"
#include "lgid/specfun.hpp"

namespace lgid {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double kSeriesMax = 4.0;
constexpr double kAsymptoticMin = 50.0;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Neumaier's variant of Kahan summation.
struct Compensated {
    double sum = 0.0, c = 0.0, abs_sum = 0.0;
    void add(double t) {
        double s = sum + t;
        if (std::fabs(sum) >= std::fabs(t))
            c += (sum - s) + t;
        else
            c += (t - s) + sum;
        sum = s;
        abs_sum += std::fabs(t);
    }
    double result() const { return sum + c; }
};

void check_arg(double x, bool allow_zero, const char* who) {
    if (!std::isfinite(x) || x < 0.0 || (!allow_zero && x == 0.0))
        throw domain_error(std::string(who) + ": argument out of domain");
}

SiCi series(double x) {
    // Maclaurin series; the largest term at x = 4 is about 10 so
    // cancellation costs at most one digit.
    Compensated s, c;
    double x2 = x * x;
    double t = x;  // x^(2k+1)/(2k+1)!
    for (int k = 0; k < 60; ++k) {
        double term = t / (2 * k + 1);
        s.add(k % 2 ? -term : term);
        t *= x2 / ((2.0 * k + 2) * (2.0 * k + 3));
        if (std::fabs(term) < eps * 1e-3 * std::fabs(s.result())) break;
    }
    t = x2 / 2.0;  // x^(2k)/(2k)!
    for (int k = 1; k < 60; ++k) {
        double term = t / (2 * k);
        c.add(k % 2 ? -term : term);
        t *= x2 / ((2.0 * k + 1) * (2.0 * k + 2));
        if (std::fabs(term) < eps * 1e-3) break;
    }
    SiCi r;
    r.si = {s.result(), 4 * eps * s.abs_sum};
    double lx = std::log(x);
    r.ci = {kEulerGamma + lx + c.result(), 4 * eps * (c.abs_sum + std::fabs(lx) + kEulerGamma)};
    return r;
}

// e^{ix} E1(ix) = g(x) - i f(x) by a Lentz continued fraction.
std::complex<double> e1_scaled(double x) {
    using C = std::complex<double>;
    const double tiny = 1e-300;
    C b(1.0, x);
    C c(1.0 / tiny, 0.0);
    C d = 1.0 / b;
    C h = d;
    for (int i = 2; i < 1000; ++i) {
        double a = -double(i - 1) * double(i - 1);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        C del = c * d;
        h *= del;
        if (std::fabs(del.real() - 1.0) + std::fabs(del.imag()) < eps) return h;
    }
    throw convergence_error("sici: continued fraction did not converge");
}

struct FG {
    double f, g, err;
};

FG asymptotic_fg(double x) {
    // f ~ (1/x) sum (-1)^k (2k)!/x^2k, g ~ (1/x^2) sum (-1)^k (2k+1)!/x^2k;
    // stop at the smallest term.
    double ix2 = 1.0 / (x * x);
    double tf = 1.0 / x, tg = ix2;
    double f = 0.0, g = 0.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 200; ++k) {
        double mag = std::fabs(tf) + std::fabs(tg);
        if (mag > last) break;
        f += tf;
        g += tg;
        last = mag;
        if (mag < eps * 1e-3 * std::fabs(f)) break;
        tf *= -(2.0 * k + 1) * (2.0 * k + 2) * ix2;
        tg *= -(2.0 * k + 2) * (2.0 * k + 3) * ix2;
    }
    return {f, g, last + 2 * eps * std::fabs(f)};
}

}  // namespace

double sinpi(double x) {
    double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
    double sgn = 1.0;
    if (r < 0) {
        r = -r;
        sgn = -1.0;
    }
    if (r > 0.5) r = 1.0 - r;  // exact by Sterbenz
    double v = r <= 0.25 ? std::sin(num::pi * r) : std::cos(num::pi * (0.5 - r));
    return sgn * v;
}

double cospi(double x) {
    double r = std::fabs(std::remainder(x, 2.0));
    double sgn = 1.0;
    if (r > 0.5) {
        r = 1.0 - r;
        sgn = -1.0;
    }
    double v = r <= 0.25 ? std::cos(num::pi * r) : std::sin(num::pi * (0.5 - r));
    return sgn * v;
}

SiCi sici(double x) {
    check_arg(x, true, "sici");
    if (x == 0.0) {
        return {{0.0, 0.0}, {-std::numeric_limits<double>::infinity(), 0.0}};
    }
    if (x <= kSeriesMax) return series(x);
    double s = std::sin(x), c = std::cos(x);
    SiCi r;
    if (x < kAsymptoticMin) {
        auto h = e1_scaled(x);
        double g = h.real(), f = -h.imag();
        double e = 4 * eps * (std::fabs(f) + std::fabs(g));
        r.si = {num::half_pi - f * c - g * s, e + eps * num::half_pi};
        r.ci = {f * s - g * c, e};
    } else {
        FG a = asymptotic_fg(x);
        r.si = {num::half_pi - a.f * c - a.g * s, a.err + eps * num::half_pi};
        r.ci = {a.f * s - a.g * c, a.err};
    }
    return r;
}

ValueWithError sin_integral_Si(double x) {
    check_arg(x, true, "sin_integral_Si");
    return sici(x).si;
}

ValueWithError cos_integral_Ci(double x) {
    check_arg(x, false, "cos_integral_Ci");
    return sici(x).ci;
}

ValueWithError si_lower(double x) {
    check_arg(x, true, "si_lower");
    ValueWithError S = sici(x).si;
    return {S.value - num::half_pi, S.err_bound + eps * num::half_pi};
}

ValueWithError aux_f(double x) {
    check_arg(x, false, "aux_f");
    if (x > kSeriesMax && x < kAsymptoticMin) {
        double f = -e1_scaled(x).imag();
        return {f, 4 * eps * std::fabs(f)};
    }
    if (x >= kAsymptoticMin) {
        FG a = asymptotic_fg(x);
        return {a.f, a.err};
    }
    SiCi v = sici(x);
    double sl = v.si.value - num::half_pi;
    double s = std::sin(x), c = std::cos(x);
    return {-c * sl + s * v.ci.value, v.si.err_bound + v.ci.err_bound + eps * 2};
}

ValueWithError aux_g(double x) {
    check_arg(x, false, "aux_g");
    if (x > kSeriesMax && x < kAsymptoticMin) {
        double g = e1_scaled(x).real();
        return {g, 4 * eps * std::fabs(g)};
    }
    if (x >= kAsymptoticMin) {
        FG a = asymptotic_fg(x);
        return {a.g, a.err};
    }
    SiCi v = sici(x);
    double sl = v.si.value - num::half_pi;
    double s = std::sin(x), c = std::cos(x);
    return {-c * v.ci.value - s * sl, v.si.err_bound + v.ci.err_bound + eps * 2};
}

}  // namespace lgid
