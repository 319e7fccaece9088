#include "recipes/common.hpp"

#include <algorithm>

#include <Eigen/Dense>

namespace lgid::recipes {

namespace {

// Right side of the cosine moment of log Gamma through log-weighted sums.
V cos_moment(double p) {
    double sp = sinpi(p), cp = cospi(p);
    V L = log2pi(), c = euler() + log2pi();
    V r = (0.5 * sp / (p * pi)) * L;
    if (sp != 0.0) r -= (p * sp / (2.0 * pi)) * w1(p);
    if (cp != 1.0) r += (2.0 * (1.0 - cp) / (pi * pi)) * (c * w0(p) + lsum(p));
    return r;
}

// Right side of the sine moment of log Gamma.
V sin_moment(double p) {
    double sp = sinpi(p), cp = cospi(p);
    V L = log2pi(), c = euler() + log2pi();
    V r = (0.5 * (1.0 - cp) / (p * pi)) * L;
    if (cp != 1.0) r -= (p * (1.0 - cp) / (2.0 * pi)) * w1(p);
    if (sp != 0.0) r -= (2.0 * sp / (pi * pi)) * (c * w0(p) + lsum(p));
    return r;
}

V lg_cos(double p) {
    return quad([=](double x) { return lg(x) * cospi(p * x); }, 0.0, 1.0, log_at_left);
}
V lg_sin(double p) {
    return quad([=](double x) { return lg(x) * sinpi(p * x); }, 0.0, 1.0, log_at_left);
}

// sum over odd q of u(q) = q^-2 sum_n log n / (4n^2 - q^2). Exact terms for
// q <= K; beyond K the terms are fitted to q^-3 (a + b log q / q + c / q)
// on the last stretch and the fit is summed with Hurwitz zeta values.
V odd_double_log_sum() {
    constexpr int K = 2047;
    std::vector<double> qs, us;
    V head{0.0, 0.0};
    for (int q = K; q >= 1; q -= 2) {
        V l = lsum(double(q));
        V u = l / (double(q) * q);
        head += u;
        if (q >= K / 2) {
            qs.push_back(q);
            us.push_back(u.value);
        }
    }
    auto fit = [&](std::size_t begin, std::size_t end) {
        Eigen::MatrixXd A(end - begin, 3);
        Eigen::VectorXd y(end - begin);
        for (std::size_t i = begin; i < end; ++i) {
            double q = qs[i];
            A(i - begin, 0) = 1.0;
            A(i - begin, 1) = std::log(q) / q;
            A(i - begin, 2) = 1.0 / q;
            y(i - begin) = us[i] * q * q * q;
        }
        return Eigen::Vector3d(A.colPivHouseholderQr().solve(y));
    };
    // tail over odd q > K, q = 2m + 1 with m >= m0: sum q^-s = 2^-s zeta(s, m0 + 1/2)
    const double h = (K + 2 - 1) / 2.0 + 0.5;
    auto tail = [&](const Eigen::Vector3d& c) {
        double z3 = std::pow(2.0, -3) * hurwitz_zeta(3.0, h).value;
        double z4 = std::pow(2.0, -4) * hurwitz_zeta(4.0, h).value;
        // sum log q / q^4 = 2^-4 (log 2 zeta(4, h) - zeta'(4, h))
        double l4 = std::pow(2.0, -4) * (num::ln2 * hurwitz_zeta(4.0, h).value - hurwitz_zeta_sderiv(4.0, h).value);
        return c(0) * z3 + c(1) * l4 + c(2) * z4;
    };
    Eigen::Vector3d full = fit(0, qs.size());
    Eigen::Vector3d half = fit(0, qs.size() / 2);
    double t = tail(full);
    return head + V{t, std::fabs(t - tail(half)) + 1e-3 * std::fabs(t)};
}

}  // namespace

void register_section4_5(RecipeRegistry& r) {
    add(r, "eq-4.5", [](const P& p) { return lg_cos(real_param(p, "p")); },
        [](const P& p) { return cos_moment(real_param(p, "p")); });
    add(r, "eq-4.5.2", [](const P&) { return lg_cos(1.0); },
        [](const P&) { return (2.0 / (pi * pi)) * (log2pi() + euler() + 2.0 * lsum(1.0)); });
    add(r, "eq-4.8", [](const P& p) { return w0(2.0 * int_param(p, "k") + 1.0); },
        [](const P& p) {
            double q = 2.0 * int_param(p, "k") + 1.0;
            return exact(0.5 / (q * q));
        });
    add(r, "eq-4.9", [](const P& p) { return lg_cos(2.0 * int_param(p, "k") + 1.0); },
        [](const P& p) {
            double q = 2.0 * int_param(p, "k") + 1.0;
            return (2.0 / (pi * pi)) * ((log2pi() + euler()) / (q * q) + 2.0 * lsum(q));
        });
    add(r, "eq-4.10", [](const P&) { return lg_cos(0.5); },
        [](const P&) {
            return log2pi() / pi - exact((3.0 * num::ln2 - 2.0) / pi) + ((4.0 - pi) / (pi * pi)) * (euler() + log2pi()) +
                   (2.0 / (pi * pi)) * lsum(0.5);
        });
    add(r, "eq-4.12", [](const P&) { return quad([](double x) { return psi(x) * sinpi(x); }); },
        [](const P&) { return -(2.0 / pi) * (log2pi() + euler() + 2.0 * lsum(1.0)); });
    add(r, "eq-4.15", [](const P&) { return 2.0 * lsum(1.0); },
        [](const P&) {
            return sum_em([](std::int64_t n) { double m = double(n); return std::log1p(1.0 / m) / (2.0 * m + 1.0); },
                          [](const SeriesJet& t) { return (log(t + 1.0) - log(t)) / (2.0 * t + 1.0); });
        });
    add(r, "eq-4.18", [](const P&) { return (4.0 / (pi * pi)) * odd_double_log_sum(); },
        [](const P&) { return -zp2() / 8.0; });
    add(r, "eq-4.20", [](const P&) { return pi * quad([](double x) { return x * lg(x) * sinpi(x); }, 0.0, 1.0, log_at_left); },
        [](const P&) {
            V c = euler() + log2pi();
            return 0.5 * log2pi() - exact(num::ln2 - 0.5) - ((pi * pi - 8.0) / (2.0 * pi * pi)) * c -
                   (8.0 / (pi * pi)) * sum_log_weighted(1.0, true);
        });

    add(r, "eq-5.5", [](const P& p) { return lg_sin(real_param(p, "p")); },
        [](const P& p) { return sin_moment(real_param(p, "p")); });
    add(r, "eq-5.5-limit", [](const P& p) { return lg_sin(2.0 * int_param(p, "k")); },
        [](const P& p) { return paired_limit(sin_moment, 2.0 * int_param(p, "k")); });
    add(r, "eq-5.5.1", [](const P& p) { return lg_sin(real_param(p, "p")); },
        [](const P& p) {
            double q = real_param(p, "p");
            double sp = sinpi(q), cp = cospi(q);
            V c = euler() + log2pi();
            V r = ((1.0 - cp) / (2.0 * q * pi)) * c +
                  ((1.0 - cp) / (4.0 * q * pi)) * (digamma(1.0 + 0.5 * q) + digamma(1.0 - 0.5 * q));
            double cot = cospi(0.5 * q) / sinpi(0.5 * q);
            r -= (2.0 * sp / (pi * pi) * (0.5 / (q * q) - pi / (4.0 * q) * cot)) * c;
            r -= (2.0 * sp / (pi * pi)) * lsum(q);
            return r;
        });
    add(r, "eq-5.9", [](const P&) { return quad([](double x) { double s = sinpi(x); return psi(x) * s * s; }); },
        [](const P&) { return -0.5 * (euler() + log2pi()); });
    add(r, "euler-sum",
        [](const P&) {
            const double c = constants().euler_gamma.value + 2.0 * num::ln2;
            return sum_em(
                [c](std::int64_t n) {
                    double m = double(n), d = 2.0 * m + 1.0;
                    return 0.5 * (psi(m + 0.5) + c) / (d * d);
                },
                [c](const SeriesJet& t) {
                    SeriesJet d = 2.0 * t + 1.0;
                    return 0.5 * (digamma_jet(t + 0.5) + c) / (d * d);
                });
        },
        [](const P&) { return exact(pi * pi / 8.0 * num::ln2) - 7.0 / 16.0 * zeta3(); });
}

}  // namespace lgid::recipes
