#include "recipes/common.hpp"

#include "lgid/errors.hpp"

namespace lgid::recipes {

namespace {

V Ci(double x) { return cos_integral_Ci(x); }
V si(double x) { return si_lower(x); }
V Si(double x) { return sin_integral_Si(x); }

// sum_{n>=1} (-1)^n Ci(q pi n)
V alt_ci(double q) { return sum_ci_lattice(q * pi, 0, true); }

// Value of the right side of the cosine-moment representation of log Gamma
// at real p (not an even integer).
V cos_moment_rhs(double p) {
    V L = log2pi();
    double sp = sinpi(p), cp = cospi(p);
    V r = (0.5 * L - 1.0) * (sp / (p * pi)) + Si(p * pi) / (p * pi);
    if (cp != 1.0) r += (2.0 * (1.0 - cp) / (pi * pi)) * sum_lattice(LatticeFn::Ci, two_pi, inv_quadratic_weight(4.0, p * p, 0), false);
    if (sp != 0.0) r += (p * sp / (pi * pi)) * sum_si_lattice(two_pi, SiWeight::inv_n_4n2_p2, false, p);
    return r;
}

// Kernel (pi v coth(pi v) - 1)/v^2 with its even series near zero.
double coth_kernel(double v) {
    if (v < 1e-2) {
        double v2 = v * v;
        return pi * pi / 3.0 - std::pow(pi, 4) * v2 / 45.0 + 2.0 * std::pow(pi, 6) * v2 * v2 / 945.0;
    }
    return (pi * v / std::tanh(pi * v) - 1.0) / (v * v);
}

V coth_laplace(double mu) {
    return 0.5 * quad_inf([mu](double v) { return coth_kernel(v) * std::exp(-mu * v); });
}

// int_0^inf t / ((a^2 + t^2)(e^{2 pi t} - 1)) dt
V binet_integral(double a) {
    return quad_inf([a](double t) { return t / ((a * a + t * t) * std::expm1(two_pi * t)); });
}

// sum_{n>=1} sin(2 pi n x) / (n (4n^2 - 1)): exact head, power-expanded tail.
V sin_rational_sum(double x) {
    constexpr int N = 64;
    double theta = two_pi * x;
    V s{0.0, 0.0};
    for (int n = N; n >= 1; --n) s += exact(std::sin(n * theta) / (n * (4.0 * n * n - 1.0)));
    double coef = 0.25;
    for (int j = 0; j < 20; ++j, coef *= 0.25) s += coef * trig_power_tail(true, theta, 2 * j + 3, N);
    return s;
}

// Richardson extrapolation to x -> 0 of a function even in x.
V even_limit(const std::function<double(double)>& g, double h) {
    double g1 = g(h), g2 = g(h / 2), g3 = g(h / 4);
    double r1 = (4.0 * g2 - g1) / 3.0, r2 = (4.0 * g3 - g2) / 3.0;
    double r = (16.0 * r2 - r1) / 15.0;
    return {r, std::fabs(r - r2)};
}

}  // namespace

void register_section1(RecipeRegistry& r) {
    // Fourier coefficients of log Gamma on shifted intervals
    add(r, "eq-1.1",
        [](const P& p) {
            double a = real_param(p, "a");
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x + a) * sinpi(2.0 * k * x); });
        },
        [](const P& p) {
            double a = real_param(p, "a");
            int k = int_param(p, "k");
            double t = 2.0 * k * pi * a;
            return -(std::log(a) - std::cos(t) * Ci(t) - std::sin(t) * si(t)) / (2.0 * k * pi);
        });
    add(r, "gr-6443-5-original",
        [](const P& p) {
            double a = real_param(p, "a");
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x + a) * sinpi(2.0 * k * x); });
        },
        [](const P& p) {
            double a = real_param(p, "a");
            int k = int_param(p, "k");
            double t = 2.0 * k * pi * a;
            return -(std::log(a) + std::cos(t) * Ci(t) - std::sin(t) * si(t)) / (2.0 * k * pi);
        });
    add(r, "eq-1.9",
        [](const P& p) {
            double a = real_param(p, "a");
            int k = int_param(p, "k");
            return quad([=](double x) { return std::log(a + x) * sinpi(2.0 * k * x); });
        },
        [](const P& p) {
            double a = real_param(p, "a");
            int k = int_param(p, "k");
            double t = 2.0 * k * pi * a, t1 = 2.0 * k * pi * (a + 1.0);
            V r = std::cos(t) * (Ci(t1) - Ci(t)) + std::sin(t) * (si(t1) - si(t)) - exact(std::log1p(1.0 / a));
            return r / (2.0 * k * pi);
        });
    add(r, "eq-1.9.2",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x) * sinpi(2.0 * k * x); }, 0.0, 1.0, log_at_left);
        },
        [](const P& p) {
            int k = int_param(p, "k");
            return (euler() + std::log(2.0 * k * pi)) / (2.0 * k * pi);
        });
    add(r, "eq-1.10",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x + 0.5) * sinpi(2.0 * k * x); });
        },
        [](const P& p) {
            int k = int_param(p, "k");
            double sgn = (k % 2) ? -1.0 : 1.0;
            return (ln2() + sgn * Ci(k * pi)) / (2.0 * k * pi);
        });
    auto log_sine_moment = [](double q) {
        return quad([=](double x) { return std::log(x) * sinpi(q * x); }, 0.0, 1.0, log_at_left);
    };
    auto log_sine_closed = [](double q) { return (Ci(q * pi) - euler() - std::log(q * pi)) / (q * pi); };
    add(r, "eq-1.10.3", [=](const P& p) { return log_sine_moment(real_param(p, "p")); },
        [=](const P& p) { return log_sine_closed(real_param(p, "p")); });
    add(r, "eq-1.10.4", [=](const P& p) { return log_sine_moment(2.0 * int_param(p, "k")); },
        [=](const P& p) { return log_sine_closed(2.0 * int_param(p, "k")); });
    add(r, "eq-1.11",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x + 1.0) * sinpi(2.0 * k * x); });
        },
        [](const P& p) {
            int k = int_param(p, "k");
            return Ci(2.0 * k * pi) / (2.0 * k * pi);
        });

    // Odd multiples q = 2k + 1
    add(r, "eq-1.15", [](const P& p) { return 2.0 * alt_ci(2.0 * int_param(p, "k") + 1.0); },
        [](const P& p) {
            int k = int_param(p, "k");
            double q = 2.0 * k + 1.0;
            return -euler() - ln2() - std::log(q) + 1.0 / q + 2.0 * odd_harmonic(k);
        });
    add(r, "eq-1.17",
        [](const P& p) {
            double a = real_param(p, "a");
            double q = 2.0 * int_param(p, "k") + 1.0;
            return quad([=](double x) { return lg(x + a) * sinpi(q * x); }, 0.0, 1.0, a == 0.0 ? log_at_left : none);
        },
        [](const P& p) {
            double a = real_param(p, "a");
            double q = 2.0 * int_param(p, "k") + 1.0;
            V s0 = alt_ci(q);
            if (a == 0.0) return (euler() + std::log(q * pi) + 2.0 * s0) / (q * pi);
            return (Ci(q * pi) + 2.0 * s0) / (q * pi);
        });
    auto odd_lg_sine = [](const P& p) {
        double q = 2.0 * int_param(p, "k") + 1.0;
        return quad([=](double x) { return lg(x) * sinpi(q * x); }, 0.0, 1.0, log_at_left);
    };
    auto odd_lg_sine_closed = [](const P& p) {
        int k = int_param(p, "k");
        double q = 2.0 * k + 1.0;
        return exact((std::log(pi / 2.0) + 1.0 / q + 2.0 * odd_harmonic(k)) / (q * pi));
    };
    add(r, "eq-1.18", odd_lg_sine, odd_lg_sine_closed);
    add(r, "eq-5.6", odd_lg_sine, odd_lg_sine_closed);
    add(r, "eq-1.19",
        [](const P& p) {
            double u = real_param(p, "u");
            return even_limit([u](double x) { return cos_integral_Ci(u * x).value - std::log(x); }, 1e-3);
        },
        [](const P& p) { return euler() + std::log(real_param(p, "u")); });
    add(r, "eq-1.20",
        [](const P& p) {
            double u = real_param(p, "u");
            auto g = [u](double x) { return std::cos(u * x) * cos_integral_Ci(u * x).value - std::log(x); };
            double g1 = g(1e-6), g2 = g(2e-6);
            return V{g1, std::fabs(g1 - g2)};
        },
        [](const P& p) { return euler() + std::log(real_param(p, "u")); });
    add(r, "eq-1.22",
        [](const P& p) {
            double q = 2.0 * int_param(p, "k") + 1.0;
            return quad([=](double x) { return lg(x + 1.0) * sinpi(q * x); });
        },
        [](const P& p) {
            double q = 2.0 * int_param(p, "k") + 1.0;
            return (Ci(q * pi) + 2.0 * alt_ci(q)) / (q * pi);
        });
    add(r, "eq-1.23.1",
        [](const P& p) {
            double q = 2.0 * int_param(p, "k") + 1.0;
            return 2.0 * alt_ci(q) + std::log(q * pi);
        },
        [](const P& p) {
            int k = int_param(p, "k");
            double q = 2.0 * k + 1.0;
            return std::log(pi / 2.0) - euler() + 1.0 / q + 2.0 * odd_harmonic(k);
        });
    add(r, "eq-1.23.2", [](const P&) { return 2.0 * alt_ci(1.0); }, [](const P&) { return exact(1.0 - num::ln2); });
    add(r, "eq-1.72", [](const P&) { return 2.0 * alt_ci(1.0); }, [](const P&) { return 1.0 - euler() - ln2(); });

    // Cosine coefficients
    add(r, "eq-1.26",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return std::log(x) * cospi(2.0 * k * x); }, 0.0, 1.0, log_at_left);
        },
        [](const P& p) {
            int k = int_param(p, "k");
            return -Si(2.0 * k * pi) / (2.0 * k * pi);
        });
    add(r, "eq-1.27",
        [](const P& p) {
            double a = real_param(p, "a");
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x + a) * cospi(2.0 * k * x); });
        },
        [](const P& p) {
            double a = real_param(p, "a");
            int k = int_param(p, "k");
            double t = 2.0 * k * pi * a;
            return -(-std::sin(t) * Ci(t) + std::cos(t) * si(t)) / (2.0 * k * pi);
        });
    add(r, "fourier-cos-2k",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x) * cospi(2.0 * k * x); }, 0.0, 1.0, log_at_left);
        },
        [](const P& p) { return exact(1.0 / (4.0 * int_param(p, "k"))); });
    add(r, "eq-1.28.1",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x + 0.5) * cospi(2.0 * k * x); });
        },
        [](const P& p) {
            int k = int_param(p, "k");
            double sgn = (k % 2) ? 1.0 : -1.0;
            return sgn * si(k * pi) / (2.0 * k * pi);
        });
    add(r, "eq-1.29",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x + 1.0) * cospi(2.0 * k * x); });
        },
        [](const P& p) {
            int k = int_param(p, "k");
            return -si(2.0 * k * pi) / (2.0 * k * pi);
        });
    auto shifted_cos_rhs = [](const P& p) {
        double a = real_param(p, "a");
        int k = int_param(p, "k");
        double t = 2.0 * k * pi * a;
        return (std::log(a) * std::sin(t) - si(t)) / (2.0 * k * pi);
    };
    add(r, "eq-1.29.1",
        [](const P& p) {
            double a = real_param(p, "a");
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x + a) * cospi(2.0 * k * (x + a)); });
        },
        shifted_cos_rhs);
    add(r, "eq-1.29.2",
        [](const P& p) {
            double a = real_param(p, "a");
            int k = int_param(p, "k");
            return quad([=](double u) { return lg(u) * cospi(2.0 * k * u); }, a, a + 1.0);
        },
        shifted_cos_rhs);

    // Binet-type representations and lattice sums
    add(r, "eq-1.41", [](const P& p) { return log_gamma(real_param(p, "a")); },
        [](const P& p) {
            double a = real_param(p, "a");
            return 0.5 * log2pi() + (a - 0.5) * std::log(a) - a + sum_lattice(LatticeFn::aux_f, two_pi * a, power_weight(1), false) / pi;
        });
    auto kummer_aux = [](double x) {
        V s = fourier_aux_sum(two_pi * x, two_pi, {{true, true, -1.0}, {false, false, 1.0}}, 1);
        return 0.5 * log2pi() - 1.0 - std::log(x) + s / pi;
    };
    add(r, "eq-1.41.1", [](const P& p) { return log_gamma(real_param(p, "x")); },
        [=](const P& p) { return kummer_aux(real_param(p, "x")); });
    add(r, "eq-B.7", [](const P& p) { return log_gamma(real_param(p, "x")); },
        [=](const P& p) { return kummer_aux(real_param(p, "x")); });
    add(r, "eq-1.43", [](const P&) { return sum_si_lattice(pi, SiWeight::inv_n, false); },
        [](const P&) { return exact(0.5 * pi * std::log(pi) - 0.5 * pi); });
    add(r, "eq-1.44", [](const P&) { return sum_si_lattice(two_pi, SiWeight::inv_n, true); },
        [](const P&) { return exact(1.5 * pi * num::ln2 - pi); });
    add(r, "eq-1.45", [](const P& p) { return hurwitz_zeta_sderiv(-1.0, real_param(p, "a")); },
        [](const P& p) {
            double a = real_param(p, "a");
            V s = sum_lattice(LatticeFn::aux_g, two_pi * a, power_weight(2), false);
            return exact(0.5 * bernoulli_poly(2, a) * std::log(a) - a * a / 4.0 + 1.0 / 12.0) + s / (2.0 * pi * pi);
        });
    add(r, "eq-1.49", [](const P&) { return sum_si_lattice(pi, SiWeight::inv_n, true); },
        [](const P&) { return exact(0.5 * pi * num::ln2 - 0.5 * pi); });
    add(r, "eq-1.49.1", [](const P& p) { return sum_si_lattice(real_param(p, "x"), SiWeight::inv_n, true); },
        [](const P& p) { return exact(0.5 * pi * num::ln2 - 0.5 * real_param(p, "x")); });
    add(r, "eq-1.52", [](const P&) { return sum_si_lattice(two_pi, SiWeight::inv_n, false); },
        [](const P&) { return 0.5 * pi * log2pi() - pi; });
    add(r, "eq-1.63", [](const P&) { return sum_ci_lattice(two_pi, 2, false); },
        [](const P&) { return 2.0 * pi * pi * (log_a() - 0.25); });
    add(r, "eq-1.64", [](const P&) { return quad(lg, 0.0, 0.5, log_at_left); },
        [](const P&) { return exact(5.0 / 24.0 * num::ln2 + 0.25 * std::log(pi)) + 1.5 * log_a(); });
    add(r, "eq-1.65",
        [](const P&) {
            V s = -sum_lattice(LatticeFn::aux_g, 0.5 * pi, power_weight(2), false);
            return (s + 0.5 * pi * catalan()) / (2.0 * pi * pi);
        },
        [](const P&) { return exact(5.0 / 64.0 + num::ln2 / 48.0) - log_a() / 8.0; });
    add(r, "eq-1.71", [](const P&) { return 2.0 * sum_ci_lattice(two_pi, 0, false); },
        [](const P&) { return 0.5 - euler(); });

    // Digamma Fourier coefficients
    auto psi_sin = [](const P& p) {
        double a = real_param(p, "a");
        int n = int_param(p, "n");
        return quad([=](double x) { return psi(x + a) * sinpi(2.0 * n * x); });
    };
    auto psi_cos = [](const P& p) {
        double a = real_param(p, "a");
        int n = int_param(p, "n");
        return quad([=](double x) { return psi(x + a) * cospi(2.0 * n * x); });
    };
    add(r, "eq-1.76", psi_sin, [](const P& p) {
        double t = 2.0 * int_param(p, "n") * pi * real_param(p, "a");
        return -std::sin(t) * Ci(t) + std::cos(t) * si(t);
    });
    add(r, "gr-6467-1-original", psi_sin, [](const P& p) {
        double t = 2.0 * int_param(p, "n") * pi * real_param(p, "a");
        return std::sin(t) * Ci(t) + std::cos(t) * si(t);
    });
    add(r, "eq-1.77",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return psi(x + 1.0) * sinpi(2.0 * k * x); });
        },
        [](const P& p) { return si(2.0 * int_param(p, "k") * pi); });
    add(r, "eq-1.77.1",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return psi(x) * sinpi(2.0 * k * x); });
        },
        [](const P&) { return exact(-0.5 * pi); });
    add(r, "eq-1.78", psi_cos, [](const P& p) {
        double t = 2.0 * int_param(p, "n") * pi * real_param(p, "a");
        return std::sin(t) * si(t) + std::cos(t) * Ci(t);
    });
    add(r, "gr-6467-2-original", psi_cos, [](const P& p) {
        double t = 2.0 * int_param(p, "n") * pi * real_param(p, "a");
        return std::sin(t) * si(t) - std::cos(t) * Ci(t);
    });
    add(r, "eq-1.78.1",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return psi(x + 1.0) * cospi(2.0 * k * x); });
        },
        [](const P& p) { return Ci(2.0 * int_param(p, "k") * pi); });

    // Cosine moments through the sine/cosine integral lattices
    add(r, "eq-1.90",
        [](const P& p) {
            double q = real_param(p, "p");
            return quad([=](double x) { return lg(x) * cospi(q * x); }, 0.0, 1.0, log_at_left);
        },
        [](const P& p) { return cos_moment_rhs(real_param(p, "p")); });
    add(r, "eq-1.90-limit",
        [](const P& p) {
            int k = int_param(p, "k");
            return quad([=](double x) { return lg(x) * cospi(2.0 * k * x); }, 0.0, 1.0, log_at_left);
        },
        [](const P& p) { return paired_limit(cos_moment_rhs, 2.0 * int_param(p, "k")); });
    add(r, "eq-1.92", [](const P&) { return quad([](double x) { return lg(x) * cospi(x); }, 0.0, 1.0, log_at_left); },
        [](const P&) {
            return Si(pi) / pi + (4.0 / (pi * pi)) * sum_lattice(LatticeFn::Ci, two_pi, inv_quadratic_weight(4.0, 1.0, 0), false);
        });
    add(r, "eq-1.95",
        [](const P& p) {
            double x = real_param(p, "x");
            return sum_lattice(LatticeFn::Ci, two_pi * x, inv_quadratic_weight(4.0, 1.0, 0), false);
        },
        [](const P& p) {
            double x = real_param(p, "x");
            return 0.5 * (euler() + std::log(two_pi * x)) + lsum(1.0) - 0.25 * pi * Si(pi * x);
        });
    add(r, "eq-1.96", [](const P& p) { return sin_rational_sum(real_param(p, "x")); },
        [](const P& p) {
            double x = real_param(p, "x");
            return exact(0.5 * pi * (2.0 * x + cospi(x) - 1.0));
        });
    add(r, "eq-1.99", [](const P&) { return sum_si_lattice(two_pi, SiWeight::inv_n_4n2_p2, false, 1.0); },
        [](const P&) { return 0.5 * pi * (3.0 + Ci(pi) - euler() - std::log(4.0 * pi)); });

    // cot, coth and exponential kernels
    add(r, "eq-1.103", [](const P&) { return quad(lgamma1p_cot_pi); },
        [](const P&) { return sum_ci_lattice(two_pi, 1, false) / pi; });
    add(r, "eq-1.105", [](const P&) { return -sum_lattice(LatticeFn::aux_f, two_pi, power_weight(1), false); },
        [](const P&) { return 0.5 * pi * log2pi() - pi; });
    add(r, "eq-1.106", [](const P& p) { return sum_ci_lattice(real_param(p, "x"), 2, false); },
        [](const P& p) {
            double x = real_param(p, "x");
            return num::zeta2 * (euler() + std::log(x)) - zp2() - 0.5 * pi * x + x * x / 8.0;
        });
    add(r, "eq-1.107", [](const P&) { return sum_ci_lattice(two_pi, 2, false); },
        [](const P&) { return num::zeta2 * (euler() + log2pi()) - zp2() - 0.5 * pi * pi; });
    add(r, "eq-1.110", [](const P& p) { return sum_lattice(LatticeFn::aux_g, two_pi * real_param(p, "a"), power_weight(0), false); },
        [](const P& p) { return binet_integral(real_param(p, "a")); });
    add(r, "eq-1.111", [](const P& p) { return digamma(real_param(p, "a")); },
        [](const P& p) {
            double a = real_param(p, "a");
            return std::log(a) - 0.5 / a - 2.0 * binet_integral(a);
        });
    add(r, "eq-1.112", [](const P& p) { return log_barnes_g(1.0 + real_param(p, "x")); },
        [](const P& p) {
            double x = real_param(p, "x");
            V I = quad_inf([x](double v) { return v * std::log(v * v + x * x) / std::expm1(two_pi * v); });
            return exact(0.5 * x * x * (std::log(x) - 1.5)) + (0.5 * x) * log2pi() + zeta_prime_m1() - I;
        });
    add(r, "eq-1.113",
        [](const P&) {
            return quad(
                       [](double v) { return v * std::log(v) / std::expm1(two_pi * v); }, 0.0, 1.0, log_at_left) +
                   quad_inf([](double v) { return v * std::log(v) / std::expm1(two_pi * v); }, 1.0);
        },
        [](const P&) { return 0.5 * zeta_prime_m1(); });
    add(r, "eq-1.114",
        [](const P& p) {
            double x = real_param(p, "x");
            return -sum_lattice(LatticeFn::aux_g, two_pi * x, power_weight(2), false) / (4.0 * pi * pi);
        },
        [](const P& p) {
            double x = real_param(p, "x");
            return -0.5 * x * log_gamma(x) + 0.5 * log_barnes_g(1.0 + x) + (std::log(x) + euler() + log2pi()) / 24.0 +
                   0.25 * x * (x - 1.0) * std::log(x) - x * x / 8.0 - zp2() / (4.0 * pi * pi);
        });
    add(r, "eq-1.115",
        [](const P& p) {
            double x = real_param(p, "x");
            return quad(lg, 0.0, x, log_at_left);
        },
        [](const P& p) {
            double x = real_param(p, "x");
            return x * log_gamma(x) - log_barnes_g(1.0 + x) - 0.5 * x * x + 0.5 * x + (0.5 * x) * log2pi();
        });
    add(r, "eq-1.117", [](const P& p) { return coth_laplace(real_param(p, "mu")); },
        [](const P& p) { return sum_lattice(LatticeFn::aux_f, real_param(p, "mu"), power_weight(1), false); });
    add(r, "eq-1.118", [](const P&) { return sum_lattice(LatticeFn::aux_f, pi, power_weight(1), false); },
        [](const P&) { return exact(0.5 * pi - 0.5 * pi * num::ln2); });
    add(r, "eq-1.119", [](const P&) { return coth_laplace(two_pi); }, [](const P&) { return pi - 0.5 * pi * log2pi(); });
    add(r, "eq-1.119.1", [](const P& p) { return log_gamma(real_param(p, "a")); },
        [](const P& p) {
            double a = real_param(p, "a");
            V I = quad([a](double x) { return std::log(-std::expm1(-two_pi * a * std::tan(x))); }, 0.0, num::half_pi, log_at_left);
            return 0.5 * log2pi() + (a - 0.5) * std::log(a) - a - I / pi;
        });
    add(r, "eq-1.121",
        [](const P& p) {
            double x = real_param(p, "x");
            return Ci(pi * x) - std::log(x);
        },
        [](const P& p) {
            double x = real_param(p, "x");
            V g = sum_lattice(LatticeFn::aux_g, pi, inv_quadratic_weight(1.0, x * x, 0), false);
            V l = sum_alternating([x](std::int64_t n) {
                double m = double(n);
                return ((n % 2) ? 1.0 : -1.0) * (-std::log(m)) / (m * m - x * x);
            });
            double s = sinpi(x);
            return (2.0 * x * s / pi) * (g + l) + (euler() + std::log(pi)) * (s / (pi * x));
        });
}

}  // namespace lgid::recipes
