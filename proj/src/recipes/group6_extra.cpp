#include "recipes/common.hpp"

namespace lgid::recipes {

namespace {

constexpr unsigned both_ends = log_at_left | log_at_right;

double log_2sin(double x) { return std::log(2.0 * sinpi(x)); }

// sum_{n>=0} Ci(2 (2n+1) pi) / (2n+1)^2
V odd_ci_sum() {
    return sum_ci_lattice(two_pi, 2, false) - 0.25 * sum_ci_lattice(2.0 * two_pi, 2, false);
}

V odd_log_square_sum() {
    return sum_em(
        [](std::int64_t n) {
            double m = 2.0 * double(n) - 1.0;
            return std::log(m) / (m * m);
        },
        [](const SeriesJet& t) {
            SeriesJet m = 2.0 * t - 1.0;
            return log(m) / (m * m);
        });
}

V x_power_lg(int m) {
    return quad([m](double x) { return std::pow(x, m) * lg(x); }, 0.0, 1.0, log_at_left);
}

}  // namespace

void register_section6_appendix(RecipeRegistry& r) {
    add(r, "eq-6.1",
        [](const P& p) {
            double q = real_param(p, "p");
            return quad([=](double x) { return log_2sin(x) * cospi(q * x); }, 0.0, 1.0, both_ends);
        },
        [](const P& p) {
            double q = real_param(p, "p");
            return (q * sinpi(q) / pi) * w1(q);
        });
    add(r, "eq-6.2",
        [](const P& p) {
            double q = real_param(p, "p") + 1.0;
            return quad([=](double x) { return log_2sin(x) * cospi(q * x); }, 0.0, 1.0, both_ends);
        },
        [](const P& p) {
            double q = real_param(p, "p");
            return -((q + 1.0) * sinpi(q) / pi) * w1(q + 1.0);
        });
    add(r, "eq-6.4",
        [](const P& p) {
            double q = real_param(p, "p");
            V I = quad([=](double x) { return log_sin_pi(x) * cospi(2.0 * q * x); }, 0.0, 1.0, both_ends);
            return (2.0 * q * pi / sinpi(2.0 * q)) * I;
        },
        [](const P& p) {
            double q = real_param(p, "p");
            return -0.5 * (digamma(q) + digamma(1.0 - q) + 1.0 / q + 2.0 * euler() + 2.0 * ln2());
        });
    add(r, "eq-6.5",
        [](const P& p) {
            double q = real_param(p, "p");
            return quad([=](double x) { return log_2sin(x) * sinpi(q * x); }, 0.0, 1.0, both_ends);
        },
        [](const P& p) {
            double q = real_param(p, "p");
            return (q * (1.0 - cospi(q)) / pi) * w1(q);
        });
    add(r, "eq-6.6",
        [](const P& p) {
            double q = real_param(p, "p");
            V I = quad([=](double x) { return log_sin_pi(x) * sinpi(2.0 * q * x); }, 0.0, 1.0, both_ends);
            return (2.0 * q * pi / (1.0 - cospi(2.0 * q))) * I;
        },
        [](const P& p) {
            double q = real_param(p, "p");
            return -0.5 * (digamma(1.0 + q) + digamma(1.0 - q) + 2.0 * euler() + 2.0 * ln2());
        });
    add(r, "eq-6.7", [](const P&) { return quad([](double x) { return x * log_sin_pi(x); }, 0.0, 1.0, both_ends); },
        [](const P&) { return -0.5 * ln2(); });
    add(r, "eq-6.8", [](const P&) { return quad([](double x) { return x * x * log_2sin(x); }, 0.0, 1.0, both_ends); },
        [](const P&) { return -zeta3() / (2.0 * pi * pi); });

    add(r, "eq-A.3",
        [](const P& p) {
            double x = real_param(p, "x");
            return digamma(1.0 + x) + digamma(1.0 - x) + 2.0 * euler();
        },
        [](const P& p) {
            double x = real_param(p, "x");
            V s = sum_em([x](std::int64_t n) { double m = double(n); return 1.0 / (m * (m * m - x * x)); },
                         [x](const SeriesJet& t) { return 1.0 / (t * (t * t - x * x)); });
            return -2.0 * x * x * s;
        });
    add(r, "eq-B.1",
        [](const P& p) {
            int n = int_param(p, "n");
            return quad([=](double x) { return std::log(x) * std::cos(n * x); }, 0.0, two_pi, log_at_left) / pi;
        },
        [](const P& p) {
            int n = int_param(p, "n");
            return -sin_integral_Si(two_pi * n) / (n * pi);
        });
    add(r, "eq-B.2",
        [](const P& p) {
            int n = int_param(p, "n");
            return quad([=](double x) { return std::log(x) * std::sin(n * x); }, 0.0, two_pi, log_at_left) / pi;
        },
        [](const P& p) {
            int n = int_param(p, "n");
            return (cos_integral_Ci(two_pi * n) - euler() - std::log(two_pi * n)) / (n * pi);
        });
    add(r, "eq-B.10", [](const P&) { return 0.25 * (euler() + log2pi()) - ln2(); },
        [](const P&) { return (2.0 / (pi * pi)) * (odd_ci_sum() - odd_log_square_sum()); });
    add(r, "eq-B.11", [](const P&) { return (2.0 / (pi * pi)) * odd_ci_sum(); },
        [](const P&) { return 0.25 - 3.0 * zeta_prime_m1() - exact(13.0 / 12.0 * num::ln2); });
    add(r, "eq-C.2", [](const P&) { return x_power_lg(1); }, [](const P&) { return 0.25 * log2pi() - log_a(); });
    add(r, "eq-C.3",
        [](const P& p) {
            int m = int_param(p, "m");
            return quad([m](double x) { return std::pow(x, m) * psi(x + 1.0); });
        },
        [](const P& p) {
            if (int_param(p, "m") == 1) return 1.0 - 0.5 * log2pi();
            return 0.5 - 0.5 * log2pi() + 2.0 * log_a();
        });
    add(r, "eq-C.4",
        [](const P& p) {
            int m = int_param(p, "m");
            return quad([m](double x) { return std::pow(x, m) * psi(x); });
        },
        [](const P& p) {
            if (int_param(p, "m") == 1) return -0.5 * log2pi();
            return -0.5 * log2pi() + 2.0 * log_a();
        });
    add(r, "eq-C.5", [](const P&) { return 1.5 * (x_power_lg(2) - 7.0 / 36.0 * log2pi() + log_a()); },
        [](const P&) { return -log2pi() / 24.0 + 3.0 * zeta3() / (8.0 * pi * pi); });
    add(r, "eq-C.6", [](const P&) { return x_power_lg(2); },
        [](const P&) { return log2pi() / 6.0 - log_a() + zeta3() / (4.0 * pi * pi); });
}

}  // namespace lgid::recipes
