#include "recipes/common.hpp"

namespace lgid::recipes {

namespace {

constexpr unsigned both_ends = log_at_left | log_at_right;

// sum_{n>=1} log n sin(2 pi n x) / n
V kummer_log_sum(double x) {
    return periodic_sum(x, true, [](const SeriesJet& n) { return log(n) / n; });
}

// Binet kernel 1/2 coth(t/2) - 1/t with its odd series near zero.
double binet_kernel(double t) {
    if (t < 0.1) {
        double t2 = t * t;
        return t * (1.0 / 12.0 - t2 / 720.0 + t2 * t2 / 30240.0 - t2 * t2 * t2 / 1209600.0);
    }
    return 0.5 / std::tanh(0.5 * t) - 1.0 / t;
}

// Li2(x) - zeta(2) x, reflected above 1/2 to avoid cancellation at x = 1.
double dilog_defect(double x) {
    if (x <= 0.5) return dilog(x).value - num::zeta2 * x;
    double y = 1.0 - x;
    return num::zeta2 * y - std::log(x) * std::log(y) - dilog(y).value;
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

V lg_half_shift(const P&) {
    return quad([](double x) { return lg(0.5 * (1.0 + x)); });
}

V lg_square_closed() {
    V g = euler(), L = log2pi();
    return g * g / 12.0 + pi * pi / 48.0 + g * L / 6.0 + L * L / 3.0 - (g + L) * zp2() / (pi * pi) + zpp2() / (2.0 * pi * pi);
}

}  // namespace

void register_section3(RecipeRegistry& r) {
    // Hurwitz zeta Fourier coefficients
    add(r, "eq-3.2",
        [](const P& p) {
            double s = real_param(p, "s");
            int n = int_param(p, "n");
            return quad([=](double x) { return hurwitz_zeta(s, x).value * sinpi(2.0 * n * x); }, 0.0, 1.0, log_at_left);
        },
        [](const P& p) {
            double s = real_param(p, "s");
            int n = int_param(p, "n");
            return exp(log_gamma(1.0 - s)) * (cospi(0.5 * s) / std::pow(two_pi * n, 1.0 - s));
        });
    add(r, "eq-3.3",
        [](const P& p) {
            double s = real_param(p, "s");
            int n = int_param(p, "n");
            return quad([=](double x) { return hurwitz_zeta(s, x).value * cospi(2.0 * n * x); }, 0.0, 1.0, log_at_left);
        },
        [](const P& p) {
            double s = real_param(p, "s");
            int n = int_param(p, "n");
            return exp(log_gamma(1.0 - s)) * (sinpi(0.5 * s) / std::pow(two_pi * n, 1.0 - s));
        });
    add(r, "eq-3.8",
        [](const P& p) {
            int n = int_param(p, "n");
            return quad([=](double x) { return lg(x) * sinpi(2.0 * n * x); }, 0.0, 1.0, log_at_left);
        },
        [](const P& p) {
            int n = int_param(p, "n");
            return (euler() + std::log(two_pi * n)) / (two_pi * n);
        });
    add(r, "eq-3.10",
        [](const P& p) {
            int n = int_param(p, "n");
            return quad([=](double x) { return lg(x) * cospi(2.0 * n * x); }, 0.0, 1.0, log_at_left);
        },
        [](const P& p) { return exact(0.25 / int_param(p, "n")); });

    // Kummer's Fourier series
    add(r, "eq-3.11", [](const P& p) { return log_gamma(real_param(p, "x")); },
        [](const P& p) {
            double x = real_param(p, "x");
            V harmonic = periodic_sum(x, true, [](const SeriesJet& n) { return 1.0 / n; });
            return exact(0.5 * std::log(pi) - 0.5 * std::log(sinpi(x))) + (euler() + log2pi()) * harmonic / pi +
                   kummer_log_sum(x) / pi;
        });
    add(r, "eq-3.12", [](const P& p) { return log_gamma(real_param(p, "x")); },
        [](const P& p) {
            double x = real_param(p, "x");
            return exact(0.5 * std::log(pi / sinpi(x))) + (0.5 - x) * (euler() + log2pi()) + kummer_log_sum(x) / pi;
        });
    add(r, "eq-5.10",
        [](const P& p) {
            double x = real_param(p, "x");
            return 0.5 * (log_gamma(x) - log_gamma(1.0 - x));
        },
        [](const P& p) {
            double x = real_param(p, "x");
            double c = (euler() + log2pi()).value;
            V s = periodic_sum(x, true, [c](const SeriesJet& n) { return (c + log(n)) / (pi * n); });
            V cerr = (euler() + log2pi()) - c;  // error of the folded constant
            return s + V{0.0, cerr.err_bound * std::fabs(0.5 - x)};
        });

    add(r, "eq-3.13.1", lg_half_shift,
        [](const P&) {
            return 3.0 * log_a() - ln2() / 12.0 - 0.5 * euler() - (4.0 / (pi * pi)) * odd_log_square_sum();
        });
    add(r, "eq-3.14", lg_half_shift,
        [](const P&) {
            return 3.0 * log_a() - ln2() / 12.0 - 0.5 * euler() + (3.0 * zp2() + num::zeta2 * ln2()) / (pi * pi);
        });
    add(r, "eq-3.23",
        [](const P&) { return -quad_inf([](double t) { return (binet_kernel(t) - t) * std::exp(-t) / t; }); },
        [](const P&) { return 0.5 * log2pi(); });
    add(r, "eq-3.24", [](const P&) { return quad([](double x) { return dilog_defect(x) / (x * std::log(x)); }); },
        [](const P&) { return -zp2(); });
    add(r, "eq-3.25", [](const P&) { return quad([](double x) { return x * lg(x); }, 0.0, 1.0, log_at_left); },
        [](const P&) { return log2pi() / 6.0 - euler() / 12.0 + zp2() / (2.0 * pi * pi); });

    // Products with log sin and log cos
    add(r, "eq-3.26",
        [](const P&) {
            auto f = [](double x) { return lg(x) * std::log(std::fabs(cospi(x))); };
            return quad(f, 0.0, 0.5, both_ends) + quad(f, 0.5, 1.0, log_at_left);
        },
        [](const P&) { return -0.5 * ln2() * log2pi() + pi * pi / 48.0; });
    add(r, "eq-3.27", [](const P&) { return quad([](double x) { return lg(x) * log_sin_pi(x); }, 0.0, 1.0, both_ends); },
        [](const P&) { return -0.5 * ln2() * log2pi() - pi * pi / 24.0; });
    add(r, "eq-3.28",
        [](const P&) {
            auto f = [](double x) { return lg(x) * std::log(std::fabs(sinpi(2.0 * x))); };
            return quad(f, 0.0, 0.5, both_ends) + quad(f, 0.5, 1.0, both_ends);
        },
        [](const P&) { return -0.5 * ln2() * log2pi() - pi * pi / 48.0; });
    add(r, "eq-3.29.1",
        [](const P&) {
            return quad([](double x) { return std::log(x) * log_sin_pi(x); }, 0.0, 1.0, both_ends);
        },
        [](const P&) {
            return sum_lattice(LatticeFn::si, two_pi, power_weight(2), false) / two_pi + num::ln2 + pi * pi / 24.0;
        });
    auto log_sin_square = [](const P&) {
        return quad([](double x) { double l = log_sin_pi(x); return l * l; }, 0.0, 1.0, both_ends);
    };
    add(r, "eq-3.30", log_sin_square, [](const P&) { return exact(num::ln2 * num::ln2 + pi * pi / 12.0); });
    add(r, "eq-6.3", log_sin_square, [](const P&) { return exact(0.5 * num::zeta2 + num::ln2 * num::ln2); });
    add(r, "eq-3.32", [](const P&) { return quad([](double x) { double l = lg(x); return l * l; }, 0.0, 1.0, log_at_left); },
        [](const P&) { return lg_square_closed(); });
    add(r, "eq-3.33",
        [](const P&) { return quad([](double x) { return lg(x) * lg(1.0 - x); }, 0.0, 1.0, both_ends); },
        [](const P&) {
            V g = euler(), L = log2pi();
            return -(g * g / 12.0 - pi * pi / 48.0 + g * L / 6.0 - L * L / 6.0 - (g + L) * zp2() / (pi * pi) +
                     zpp2() / (2.0 * pi * pi));
        });
    add(r, "eq-3.34", [](const P&) { return log_barnes_g(0.5); },
        [](const P&) { return -1.5 * log_a() - 0.25 * std::log(pi) + 0.125 + ln2() / 24.0; });
}

}  // namespace lgid::recipes
