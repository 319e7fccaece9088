#include "recipes/common.hpp"

namespace lgid::recipes {

namespace {

constexpr unsigned both_ends = log_at_left | log_at_right;

V zeta_odd(int m) { return hurwitz_zeta(double(m), 1.0); }

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

V lg_sin_odd(int k) {
    double q = 2.0 * k + 1.0;
    return quad([=](double x) { return log_sin_pi(x) * sinpi(q * x); }, 0.0, 1.0, both_ends);
}

V lg_sin_odd_closed(int k) {
    double q = 2.0 * k + 1.0;
    return exact(2.0 / (q * pi) * (num::ln2 - 1.0 / q - 2.0 * odd_harmonic(k)));
}

}  // namespace

void register_section2(RecipeRegistry& r) {
    add(r, "eq-2.9",
        [](const P& p) {
            double q = real_param(p, "p");
            return quad([=](double x) { return (lg(x) + lg(1.0 - x)) * cospi(q * x); }, 0.0, 1.0, both_ends);
        },
        [](const P& p) {
            double q = real_param(p, "p");
            double sp = sinpi(q);
            return (sp / (q * pi)) * log2pi() - (q * sp / pi) * w1(q);
        });
    add(r, "raabe", [](const P&) { return quad(lg, 0.0, 1.0, log_at_left); }, [](const P&) { return 0.5 * log2pi(); });

    auto half_angle = [](const P&) {
        return quad([](double x) { return lg(x) * (cospi(0.5 * x) + sinpi(0.5 * x)); }, 0.0, 1.0, log_at_left);
    };
    auto inv16 = [](std::int64_t n) {
        double m = double(n);
        return 1.0 / (m * (16.0 * m * m - 1.0));
    };
    add(r, "eq-2.13", half_angle, [=](const P&) { return (2.0 / pi) * log2pi() - (2.0 / pi) * sum_direct(inv16, 3.0); });
    add(r, "eq-2.14", [=](const P&) { return sum_direct(inv16, 3.0); }, [](const P&) { return exact(3.0 * num::ln2 - 2.0); });
    add(r, "eq-2.15",
        [](const P&) {
            return sum_direct([](std::int64_t n) { double m = double(n); return 1.0 / (m * (4.0 * m * m - 1.0)); }, 3.0);
        },
        [](const P&) { return exact(2.0 * num::ln2 - 1.0); });
    add(r, "eq-2.16", half_angle, [](const P&) { return exact(2.0 / pi * (std::log(pi) - 2.0 * num::ln2 + 2.0)); });
    add(r, "eq-2.21", [](const P& p) { return w1(2.0 * int_param(p, "k") + 1.0); },
        [](const P& p) {
            int k = int_param(p, "k");
            double q = 2.0 * k + 1.0;
            return exact((2.0 * num::ln2 - 1.0 / q - 2.0 * odd_harmonic(k)) / (q * q));
        });
    auto lg_sin_pi = [](const P&) { return quad([](double x) { return lg(x) * sinpi(x); }, 0.0, 1.0, log_at_left); };
    auto lg_sin_pi_closed = [](const P&) { return exact((std::log(0.5 * pi) + 1.0) / pi); };
    add(r, "eq-2.26", lg_sin_pi, lg_sin_pi_closed);
    add(r, "eq-5.7", lg_sin_pi, lg_sin_pi_closed);
    add(r, "eq-2.28",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x) * cospi(2.0 * k * x); }, 0.0, 1.0, log_at_left);
        },
        [](const P& p) { return exact(0.25 / int_param(p, "k")); });

    // log sin moments
    add(r, "eq-2.29",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return log_sin_pi(x) * cospi(2.0 * k * x); }, 0.0, 1.0, both_ends);
        },
        [](const P& p) { return exact(-0.5 / int_param(p, "k")); });
    add(r, "eq-2.30",
        [](const P& p) {
            double q = 2.0 * int_param(p, "k") + 1.0;
            return quad([=](double x) { return log_sin_pi(x) * cospi(q * x); }, 0.0, 1.0, both_ends);
        },
        [](const P&) { return V{0.0, 0.0}; });
    add(r, "eq-2.31", [](const P&) { return quad(log_sin_pi, 0.0, 1.0, both_ends); }, [](const P&) { return -ln2(); });
    add(r, "eq-2.32",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return log_sin_pi(x) * sinpi(2.0 * k * x); }, 0.0, 1.0, both_ends);
        },
        [](const P&) { return V{0.0, 0.0}; });
    add(r, "eq-2.33", [](const P& p) { return lg_sin_odd(int_param(p, "k")); },
        [](const P& p) { return lg_sin_odd_closed(int_param(p, "k")); });
    add(r, "eq-5.8", [](const P& p) { return lg_sin_odd(int_param(p, "k")); },
        [](const P& p) { return lg_sin_odd_closed(int_param(p, "k")); });
    add(r, "eq-2.36.1",
        [](const P&) { return quad([](double x) { return x * log_sin_pi(x) * sinpi(x); }, 0.0, 1.0, both_ends); },
        [](const P&) { return exact((num::ln2 - 1.0) / pi); });
    add(r, "eq-2.37", [](const P&) { return quad([](double x) { return x * x * log_sin_pi(x); }, 0.0, 1.0, both_ends); },
        [](const P&) { return -ln2() / 3.0 - zeta3() / (2.0 * pi * pi); });

    // Moments of log Gamma
    add(r, "eq-2.38", [](const P&) { return quad([](double x) { return x * lg(x); }, 0.0, 1.0, log_at_left); },
        [](const P&) { return 0.25 * log2pi() - log_a(); });
    add(r, "eq-2.39", [](const P&) { return quad([](double x) { return x * x * lg(x); }, 0.0, 1.0, log_at_left); },
        [](const P&) { return log2pi() / 6.0 - log_a() + zeta3() / (4.0 * pi * pi); });
    add(r, "eq-2.43",
        [](const P&) {
            return sum_direct(
                [](std::int64_t n) {
                    double m = double(n), d = 4.0 * m * m - 1.0;
                    return 1.0 / (m * d * d);
                },
                5.0);
        },
        [](const P&) { return exact(1.5 - 2.0 * num::ln2); });
    add(r, "eq-2.44",
        [](const P&) { return quad([](double x) { return (x - 0.5) * lg(x) * cospi(x); }, 0.0, 1.0, log_at_left); },
        [](const P&) { return exact(-(std::log(0.5 * pi) + 2.0) / (pi * pi)); });
    add(r, "eq-2.46",
        [](const P&) {
            return 16.0 * sum_direct(
                              [](std::int64_t n) {
                                  double m = double(n), d = 4.0 * m * m - 1.0;
                                  return 1.0 / (m * d * d * d);
                              },
                              7.0);
        },
        [](const P&) { return 7.0 * zeta3() + 32.0 * ln2() - 30.0; });
    add(r, "eq-2.48",
        [](const P&) { return quad([](double x) { return psi(x) * x * (1.0 - x) * cospi(x); }, 0.0, 1.0, log_at_left); },
        [](const P&) { return (2.0 - 3.5 * zeta3()) / (pi * pi); });

    // Bernoulli polynomial moments
    add(r, "eq-2.51",
        [](const P& p) {
            int m = 2 * int_param(p, "n") + 1;
            // the integrand is symmetric about 1/2
            return 2.0 * quad([=](double x) { return bernoulli_poly(m, x) * cospi(x) / sinpi(x); }, 0.0, 0.5);
        },
        [](const P& p) {
            int n = int_param(p, "n");
            double sgn = (n % 2) ? 1.0 : -1.0;
            return (sgn * 2.0 * factorial(2 * n + 1) / std::pow(two_pi, 2 * n + 1)) * zeta_odd(2 * n + 1);
        });
    add(r, "eq-2.52",
        [](const P& p) {
            int m = 2 * int_param(p, "n");
            return quad([=](double x) { return bernoulli_poly(m, x) * log_sin_pi(x); }, 0.0, 1.0, both_ends);
        },
        [](const P& p) {
            int n = int_param(p, "n");
            double sgn = (n % 2) ? -1.0 : 1.0;
            return (sgn * factorial(2 * n) / std::pow(two_pi, 2 * n)) * zeta_odd(2 * n + 1);
        });
    add(r, "eq-2.53",
        [](const P& p) {
            int m = 2 * int_param(p, "n");
            return quad([=](double x) { return bernoulli_poly(m, x) * lg(x); }, 0.0, 1.0, log_at_left);
        },
        [](const P& p) {
            int n = int_param(p, "n");
            double sgn = (n % 2) ? 1.0 : -1.0;
            return (sgn * factorial(2 * n) / (2.0 * std::pow(two_pi, 2 * n))) * zeta_odd(2 * n + 1);
        });
}

}  // namespace lgid::recipes
