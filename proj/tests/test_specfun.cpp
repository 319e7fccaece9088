// Special functions against literal reference values (30-digit mpmath runs
// recorded here), elementary closed forms, series oracles written in this
// file, and the functional-equation invariants.

#include <doctest.h>

#include <cmath>
#include <random>

#include "lgid/errors.hpp"
#include "lgid/quadrature.hpp"
#include "lgid/specfun.hpp"

using namespace lgid;

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr double euler_gamma = 0.5772156649015328606065;
constexpr double log_glaisher = 0.2487544770337842625473;
constexpr double zeta3 = 1.2020569031595942854;

// Maclaurin series in long double; good to ~1e-16 for x <= 8.
long double si_taylor(long double x) {
    long double term = x, sum = 0;
    for (int k = 0; k < 60; ++k) {
        sum += term / (2 * k + 1);
        term *= -x * x / ((2 * k + 2) * (2 * k + 3));
    }
    return sum;
}

long double ci_taylor(long double x) {
    long double term = -x * x / 2, sum = 0;
    for (int k = 1; k < 60; ++k) {
        sum += term / (2 * k);
        term *= -x * x / ((2 * k + 1) * (2 * k + 2));
    }
    return (long double)euler_gamma + std::log(x) + sum;
}

std::mt19937_64& rng() {
    static std::mt19937_64 g(20261015);
    return g;
}

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

}  // namespace

TEST_SUITE("specfun") {

TEST_CASE("Si examples") {
    CHECK(sin_integral_Si(0.0).value == 0.0);
    ValueWithError big = sin_integral_Si(1e6);
    CHECK(std::fabs(big.value - pi / 2) < 2e-6);
    ValueWithError at_pi = sin_integral_Si(pi);
    CHECK(std::fabs(at_pi.value - 1.851937051982466170361) < 1e-13);
    CHECK(at_pi.err_bound <= 1e-13);
    // tanh-sinh oracle of the defining integral
    ValueWithError q = integrate([](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, pi, 1e-13);
    CHECK(std::fabs(at_pi.value - q.value) <= 1e-13 + q.err_bound);
    for (double x : {0.5, 2.0, 5.0, 8.0})
        CHECK(std::fabs(sin_integral_Si(x).value - double(si_taylor(x))) < 1e-13);
    CHECK_THROWS_AS(sin_integral_Si(-1.0), domain_error);
    CHECK_THROWS_AS(sin_integral_Si(INFINITY), domain_error);
    CHECK_THROWS_AS(sin_integral_Si(NAN), domain_error);
}

TEST_CASE("Ci examples") {
    double y = 1e-8;
    CHECK(std::fabs(std::cos(y) * cos_integral_Ci(y).value - std::log(y) - euler_gamma) < 1e-7);
    CHECK(std::fabs(cos_integral_Ci(1e6).value) < 2e-6);
    ValueWithError c1 = cos_integral_Ci(1.0);
    CHECK(std::fabs(c1.value - double(ci_taylor(1.0L))) < 1e-14);
    CHECK(std::fabs(c1.value - 0.3374039229009681346626) < 1e-14);
    CHECK(c1.err_bound <= 1e-13);
    for (double x : {0.3, 3.0, 7.5}) CHECK(std::fabs(cos_integral_Ci(x).value - double(ci_taylor(x))) < 1e-13);
    // both regimes agree with each other across the switch point
    CHECK(std::fabs(cos_integral_Ci(12.5).value - double(ci_taylor(12.5L))) < 1e-12);
    CHECK_THROWS_AS(cos_integral_Ci(0.0), domain_error);
    CHECK_THROWS_AS(cos_integral_Ci(-2.0), domain_error);
}

TEST_CASE("si_lower examples and composition") {
    CHECK(si_lower(0.0).value == doctest::Approx(-pi / 2).epsilon(1e-16));
    CHECK(std::fabs(si_lower(1e6).value) < 2e-6);
    CHECK(std::fabs(si_lower(2 * pi).value - (1.418151576132628450246 - pi / 2)) < 1e-13);
    for (int i = 0; i < 100; ++i) {
        double x = uniform(0.0, 100.0);
        if (x == 0.0) continue;
        double d = si_lower(x).value - (sin_integral_Si(x).value - pi / 2);
        CHECK(std::fabs(d) <= 4 * std::numeric_limits<double>::epsilon());
    }
    CHECK_THROWS_AS(si_lower(-0.5), domain_error);
}

TEST_CASE("aux functions") {
    ValueWithError f1 = aux_f(1.0);
    CHECK(std::fabs(f1.value - 0.6214496242358133576393) < 1e-10);
    ValueWithError fq = integrate_to_inf([](double u) { return std::exp(-u) / (1 + u * u); }, 0.0);
    CHECK(std::fabs(f1.value - fq.value) < 1e-10);
    ValueWithError g2 = aux_g(2.0);
    CHECK(std::fabs(g2.value - 0.1445453030373324204587) < 1e-10);
    ValueWithError gq = integrate_to_inf([](double u) { return u * std::exp(-2 * u) / (1 + u * u); }, 0.0);
    CHECK(std::fabs(g2.value - gq.value) < 1e-10);
    CHECK(std::fabs(aux_f(100.0).value * 100 - 1) < 1e-3);
    for (double x : {0.2, 1.0, 3.3, 11.9, 12.1, 40.0, 500.0}) {
        double f = aux_f(x).value, g = aux_g(x).value;
        double ci = cos_integral_Ci(x).value, si = si_lower(x).value;
        CHECK(std::fabs(f * f + g * g - (ci * ci + si * si)) < 1e-12);
    }
    CHECK_THROWS_AS(aux_f(0.0), domain_error);
    CHECK_THROWS_AS(aux_g(-1.0), domain_error);
}

TEST_CASE("Si and Ci derivatives by central differences") {
    const double h = 1e-5;
    for (int i = 0; i <= 40; ++i) {
        double x = 0.1 * std::pow(500.0, i / 40.0);
        double dsi = (sin_integral_Si(x + h).value - sin_integral_Si(x - h).value) / (2 * h);
        double dci = (cos_integral_Ci(x + h).value - cos_integral_Ci(x - h).value) / (2 * h);
        CHECK(std::fabs(dsi - std::sin(x) / x) <= 1e-6);
        CHECK(std::fabs(dci - std::cos(x) / x) <= 1e-6);
    }
}

TEST_CASE("log gamma") {
    CHECK(std::fabs(log_gamma(1.0).value) < 1e-14);
    CHECK(std::fabs(log_gamma(0.5).value - 0.5 * std::log(pi)) < 1e-14);
    CHECK(std::fabs(log_gamma(0.3).value + log_gamma(0.7).value - (std::log(2 * pi) - std::log(2 * std::sin(0.3 * pi)))) <
          1e-14);
    CHECK(log_gamma(7.3).value == doctest::Approx(7.147892523022248692104).epsilon(1e-13));
    CHECK(log_gamma(1e-6).value == doctest::Approx(std::lgamma(1e-6)).epsilon(1e-13));
    CHECK(log_gamma(1e6).value == doctest::Approx(std::lgamma(1e6)).epsilon(1e-13));
    CHECK_THROWS_AS(log_gamma(0.0), domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), domain_error);
}

TEST_CASE("log gamma reflection and duplication") {
    for (int i = 0; i < 50; ++i) {
        double x = uniform(0.0, 1.0);
        if (x == 0.0) continue;
        double r = log_gamma(x).value + log_gamma(1 - x).value - std::log(2 * pi) + std::log(2 * sinpi(x));
        CHECK(std::fabs(r) <= 1e-11);
    }
    for (int i = 0; i < 50; ++i) {
        double x = uniform(0.0, 5.0);
        if (x == 0.0) continue;
        double r = log_gamma(2 * x).value - log_gamma(x).value - log_gamma(x + 0.5).value - (2 * x - 1) * std::log(2.0) +
                   0.5 * std::log(pi);
        CHECK(std::fabs(r) <= 1e-11);
    }
}

TEST_CASE("digamma and polygamma") {
    CHECK(std::fabs(digamma(0.5).value - (-euler_gamma - 2 * std::log(2.0))) < 1e-14);
    CHECK(std::fabs(digamma(0.75).value - (-euler_gamma + pi / 2 - 3 * std::log(2.0))) < 1e-14);
    CHECK(std::fabs(polygamma(2, 0.5).value + 14 * zeta3) < 1e-12);
    CHECK(std::fabs(digamma(0.3).value - -3.502524222200133124915) < 1e-13);
    CHECK(std::fabs(polygamma(1, 0.3).value - 12.24536454610773130117) < 1e-12);
    CHECK(std::fabs(polygamma(3, 2.5).value - 0.2239058488172520512551) < 1e-12);
    for (double x : {0.01, 0.3, 1.0, 2.7, 9.5, 30.0, 1e4}) CHECK(std::fabs(digamma(1 + x).value - digamma(x).value - 1 / x) <= 1e-12);
    CHECK(std::fabs(digamma(0.3 + 4).value - digamma(0.3).value - harmonic(4, 1, 0.3)) < 1e-13);
    CHECK_THROWS_AS(polygamma(4, 1.0), domain_error);
    CHECK(polygamma(0, 0.3).value == digamma(0.3).value);
    CHECK_THROWS_AS(polygamma(-1, 1.0), domain_error);
    CHECK_THROWS_AS(digamma(0.0), domain_error);
}

TEST_CASE("harmonic") {
    CHECK(harmonic(0, 1, 1.0) == 0.0);
    CHECK(harmonic(2, 1, 1.0) == 1.5);
    CHECK(harmonic(3, 2, 1.0) == doctest::Approx(1 + 0.25 + 1.0 / 9).epsilon(1e-16));
    CHECK(harmonic(2, 1, 0.5) == doctest::Approx(2 + 2.0 / 3).epsilon(1e-16));
}

TEST_CASE("Hurwitz zeta") {
    CHECK(std::fabs(hurwitz_zeta(2, 1).value - pi * pi / 6) < 1e-14);
    // -B_3(v)/3 with B_3(v) = v^3 - 3v^2/2 + v/2
    double v = 0.4, b3 = v * v * v - 1.5 * v * v + 0.5 * v;
    CHECK(std::fabs(hurwitz_zeta(-2, v).value + b3 / 3) < 1e-13);
    CHECK(std::fabs(hurwitz_zeta(0, 0.25).value - 0.25) < 1e-14);
    CHECK(std::fabs(hurwitz_zeta(-2.5, 0.3).value - -0.009496380931514519790079) < 1e-11);
    CHECK(std::fabs(hurwitz_zeta(3.5, 0.7).value - 3.692768064686826959454) < 1e-11);
    CHECK(std::fabs(riemann_zeta_deriv(0, -3.5).value - 0.004441011335479431958535) < 1e-11);
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), pole_error);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), domain_error);
}

TEST_CASE("Hurwitz zeta a-derivative") {
    const double h = 1e-5;
    for (double s : {-0.5, 0.5, 2.5})
        for (double a : {0.3, 0.8, 1.7}) {
            double d = (hurwitz_zeta(s, a + h).value - hurwitz_zeta(s, a - h).value) / (2 * h);
            CHECK(std::fabs(d + s * hurwitz_zeta(s + 1, a).value) <= 1e-6);
        }
}

TEST_CASE("Hurwitz zeta s-derivatives") {
    CHECK(std::fabs(hurwitz_zeta_sderiv(0, 0.7).value - (log_gamma(0.7).value - 0.5 * std::log(2 * pi))) < 1e-12);
    CHECK(std::fabs(hurwitz_zeta_sderiv(-1, 1).value - (1.0 / 12 - log_glaisher)) < 1e-10);
    CHECK(std::fabs(hurwitz_zeta_sderiv(-1, 0.6).value - 0.01511405594898228598183) < 1e-10);
    CHECK(std::fabs(hurwitz_zeta_sderiv(2, 0.4).value - 4.693115385391970319414) < 1e-10);
    CHECK(std::fabs(hurwitz_zeta_deriv(2, 0.5, 1.2).value - -16.01271278507674240966) < 1e-9);
    // neighbourhood of s = -2 by a centred difference of zeta itself
    double s = -2.0 + 1e-3, h = 1e-5;
    double d = (hurwitz_zeta(s + h, 0.45).value - hurwitz_zeta(s - h, 0.45).value) / (2 * h);
    CHECK(std::fabs(hurwitz_zeta_sderiv(s, 0.45).value - d) < 1e-8);
    CHECK_THROWS_AS(hurwitz_zeta_sderiv(1.0, 0.5), pole_error);
}

TEST_CASE("Riemann zeta derivatives") {
    CHECK(std::fabs(riemann_zeta_deriv(0, 2).value - pi * pi / 6) < 1e-14);
    CHECK(std::fabs(riemann_zeta_deriv(1, 2).value - constants().zeta_prime_2.value) < 1e-13);
    double l = std::log(2 * pi);
    double z1m1 = (1 - euler_gamma - l) / 12 + -0.9375482543158437537026 / (2 * pi * pi);
    CHECK(std::fabs(riemann_zeta_deriv(1, -1).value - z1m1) < 1e-12);
    CHECK(std::fabs(riemann_zeta_deriv(2, -2).value - -0.06576351618742519558995) < 1e-11);
    CHECK_THROWS_AS(riemann_zeta_deriv(1, 1.0), pole_error);
}

TEST_CASE("constants") {
    const Constants& c = constants();
    CHECK(std::fabs(c.euler_gamma.value - euler_gamma) < 1e-14);
    CHECK(std::fabs(c.log_glaisher.value - log_glaisher) < 1e-14);
    CHECK(std::fabs(c.catalan.value - 0.9159655941772190150546) < 1e-14);
    CHECK(std::fabs(c.zeta3.value - zeta3) < 1e-14);
    CHECK(std::fabs(c.zeta_prime_2.value - -0.9375482543158437537026) < 1e-14);
    CHECK(std::fabs(c.zeta_dprime_2.value - 1.989280234298901023421) < 1e-13);
    CHECK(std::fabs(c.log_two_pi.value - std::log(2 * pi)) < 1e-14);
    CHECK(std::fabs(c.log_glaisher.value - (1.0 / 12 - riemann_zeta_deriv(1, -1).value)) < 1e-12);
    // zeta'(-1) rebuilt from zeta'(2) through the functional equation
    double zm1 = (1 - c.euler_gamma.value - c.log_two_pi.value) / 12 + c.zeta_prime_2.value / (2 * pi * pi);
    CHECK(std::fabs(c.zeta_prime_m1.value - zm1) < 1e-12);
    CHECK(std::exp(c.log_glaisher.value) > 1.282);
    CHECK(std::exp(c.log_glaisher.value) < 1.283);
    CHECK(&constants() == &c);
}

TEST_CASE("Bernoulli polynomials") {
    CHECK(bernoulli_poly(1, 0.3) == doctest::Approx(0.3 - 0.5).epsilon(1e-15));
    const double bn[] = {1, -0.5, 1.0 / 6, 0, -1.0 / 30, 0, 1.0 / 42, 0, -1.0 / 30, 0, 5.0 / 66, 0, -691.0 / 2730};
    for (int n = 0; n <= 12; ++n) {
        CHECK(bernoulli_poly(n, 0.0) == doctest::Approx(bn[n]).epsilon(1e-15));
        CHECK(bernoulli_number(n) == doctest::Approx(bn[n]).epsilon(1e-15));
    }
    CHECK(std::fabs(bernoulli_poly(4, 0.8) - bernoulli_poly(4, 0.2)) < 1e-15);
    CHECK(std::fabs(bernoulli_poly(5, 0.8) + bernoulli_poly(5, 0.2)) < 1e-15);
    CHECK_THROWS_AS(bernoulli_poly(13, 0.5), unsupported_degree);
}

TEST_CASE("Barnes G") {
    CHECK(std::fabs(log_barnes_g(1.0).value) < 1e-12);
    CHECK(std::fabs(log_barnes_g(2.0).value) < 1e-12);
    double half = -1.5 * log_glaisher - 0.25 * std::log(pi) + 0.125 + std::log(2.0) / 24;
    CHECK(std::fabs(log_barnes_g(0.5).value - half) < 1e-10);
    CHECK(std::fabs(log_barnes_g(0.5).value - -0.5054330544896953827977) < 1e-10);
    CHECK(std::fabs(log_barnes_g(3.7).value - 0.3852902057046428741868) < 1e-10);
    for (double x : {0.5, 1.5, 2.5})
        CHECK(std::fabs(log_barnes_g(1 + x).value - log_gamma(x).value - log_barnes_g(x).value) <= 1e-9);
    // Adamchik integral route, tail integral split at v = 1
    for (double x : {0.5, 1.0}) {
        auto kernel = [x](double v) { return v == 0.0 ? 0.0 : v * std::log(v * v + x * x) / std::expm1(2 * pi * v); };
        ValueWithError i = integrate(kernel, 0.0, 1.0) + integrate_to_inf(kernel, 1.0);
        double rhs = 0.5 * x * x * (std::log(x) - 1.5) + 0.5 * x * std::log(2 * pi) + -0.1654211437004509292139 - i.value;
        CHECK(std::fabs(log_barnes_g(1 + x).value - rhs) <= 1e-9);
    }
    CHECK_THROWS_AS(log_barnes_g(0.0), domain_error);
}

TEST_CASE("dilogarithm") {
    CHECK(std::fabs(dilog(1.0).value - pi * pi / 6) < 1e-14);
    CHECK(dilog(0.0).value == 0.0);
    CHECK(std::fabs(dilog(-1.0).value + pi * pi / 12) < 1e-14);
    CHECK(std::fabs(dilog(0.4).value - 0.4492829744712816928213) < 1e-13);
    CHECK(std::fabs(dilog(-3.0).value - -1.939375420766708953077) < 1e-13);
    CHECK_THROWS_AS(dilog(1.5), domain_error);
}

TEST_CASE("phi rational") {
    for (long k = 1; k <= 4; ++k) {
        double odd = 0;
        for (long j = 1; j <= k; ++j) odd += 1.0 / (2 * j - 1);
        double q = 2 * k + 1;
        CHECK(std::fabs(phi_rational(2, 2 * k + 1).value - (2 * q * std::log(2.0) - 2 * q * odd)) < 1e-12);
    }
    // defining series summed directly, tail by its integral bound
    auto direct = [](double a) {
        long double s = 0;
        const long n_max = 2'000'000;
        for (long n = n_max; n >= 1; --n) {
            long double an = a * (long double)n;
            s += 1 / (an * (an * an - 1));
        }
        long double tail = 1 / (2 * (long double)a * a * a * (long double)n_max * n_max);
        return double(1 + 2 * (s + tail));
    };
    CHECK(std::fabs(phi_rational(2, 3).value - direct(2.0 / 3)) <= 1e-10);
    CHECK(std::fabs(phi_rational(3, 2).value - direct(1.5)) <= 1e-10);
    CHECK(std::fabs(phi_rational(5, 3).value - direct(5.0 / 3)) <= 1e-10);
    CHECK_THROWS_AS(phi_rational(2, 4), argument_error);
    CHECK_THROWS_AS(phi_rational(3, 1), argument_error);
}

TEST_CASE("sinpi and cospi") {
    CHECK(sinpi(1.0) == 0.0);
    CHECK(cospi(0.5) == 0.0);
    CHECK(sinpi(0.5) == 1.0);
    CHECK(std::fabs(sinpi(1e6 + 0.25) - std::sqrt(0.5)) < 1e-15);
}

}  // TEST_SUITE
