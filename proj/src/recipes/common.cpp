#include "recipes/common.hpp"

#include <algorithm>
#include <limits>

#include "lgid/errors.hpp"

namespace lgid::recipes {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_denominator(double c, double q) {
    // c n^2 - q near zero for the n closest to sqrt(q / c)
    if (q <= 0.0) return;
    double r = std::sqrt(q / c);
    for (long n = std::max(1L, long(std::floor(r)) - 1); n <= long(std::ceil(r)) + 1; ++n)
        if (std::fabs(c * double(n) * double(n) - q) < 1e-8) throw argument_error("series weight has a vanishing denominator");
}
}  // namespace

void add(RecipeRegistry& r, const std::string& id, SideFn lhs, SideFn rhs) {
    if (!r.emplace(id, Recipe{std::move(lhs), std::move(rhs)}).second) throw argument_error("duplicate recipe id " + id);
}

double odd_harmonic(int k) {
    double s = 0.0;
    for (int j = k - 1; j >= 0; --j) s += 1.0 / (2.0 * j + 1.0);
    return s;
}

V quad(std::function<double(double)> f, double a, double b, unsigned hints, double tol) {
    IntegrandSpec s;
    s.evaluator = std::move(f);
    s.a = a;
    s.b = b;
    s.singularity_hints = hints;
    s.target_abs_tol = tol;
    return integrate_finite(s);
}

V quad_pieces(const std::function<double(double)>& f, const std::vector<double>& pts, double tol) {
    V total{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += quad(f, pts[i], pts[i + 1], none, tol);
    return total;
}

V quad_inf(std::function<double(double)> f, double a, double tol) {
    IntegrandSpec s;
    s.evaluator = std::move(f);
    s.domain = Domain::semi_infinite;
    s.a = a;
    s.target_abs_tol = tol;
    return integrate_semi_infinite(s);
}

V sum_em(std::function<double(std::int64_t)> term, std::function<SeriesJet(const SeriesJet&)> ext) {
    SeriesSpec s;
    s.term = std::move(term);
    s.tail = TailStrategy::euler_maclaurin(std::move(ext));
    return sum_series(s);
}

V sum_direct(std::function<double(std::int64_t)> term, double decay) {
    SeriesSpec s;
    s.term = std::move(term);
    s.tail = TailStrategy::direct(decay);
    return sum_series(s);
}

V sum_alternating(std::function<double(std::int64_t)> term) {
    SeriesSpec s;
    s.term = std::move(term);
    s.tail = TailStrategy::alternating();
    return sum_series(s);
}

LatticeWeight inv_quadratic_weight(double c, double q, int e) {
    check_denominator(c, q);
    LatticeWeight w;
    w.exact = [c, q, e](double n) { return std::pow(n, -e) / (c * n * n - q); };
    // 1/(c n^2 - q) = sum_j q^j / c^(j+1) n^-(2j+2)
    double coef = 1.0 / c;
    for (int j = 0; j < 60; ++j) {
        w.expansion.push_back({coef, 2.0 * j + 2.0 + e});
        coef *= q / c;
        if (std::fabs(coef) < 1e-30) break;
    }
    return w;
}

V w1(double p) {
    check_denominator(4.0, p * p);
    return sum_em([p](std::int64_t n) { double x = double(n); return 1.0 / (x * (4.0 * x * x - p * p)); },
                  [p](const SeriesJet& t) { return 1.0 / (t * (4.0 * t * t - p * p)); });
}

V w0(double p) {
    check_denominator(4.0, p * p);
    return sum_em([p](std::int64_t n) { double x = double(n); return 1.0 / (4.0 * x * x - p * p); },
                  [p](const SeriesJet& t) { return 1.0 / (4.0 * t * t - p * p); });
}

V fourier_aux_sum(double theta, double X, const std::vector<FourierAuxTerm>& parts, int e, int head) {
    V s{0.0, 0.0};
    for (int n = head; n >= 1; --n) {
        double x = n * X;
        double w = std::pow(double(n), -e);
        for (const auto& pt : parts) {
            V F = pt.use_g ? aux_g(x) : aux_f(x);
            double tr = pt.use_sin ? std::sin(n * theta) : std::cos(n * theta);
            s += (pt.coef * tr * w) * F;
        }
    }
    // f ~ sum (-1)^k (2k)!/x^(2k+1), g ~ sum (-1)^k (2k+1)!/x^(2k+2)
    const double xN = head * X;
    double trunc = 0.0;
    for (const auto& pt : parts) {
        int off = pt.use_g ? 1 : 0;
        double prev = std::numeric_limits<double>::infinity();
        for (int k = 0;; ++k) {
            int order = 2 * k + 1 + off;
            double ak = ((k % 2) ? -1.0 : 1.0) * factorial(2 * k + off);
            int m = order + e;
            double mag = std::fabs(pt.coef * ak) * std::pow(xN, -order) * double(head) / std::max(1, m - 1);
            if (mag < 1e-22 || mag > prev || k > 30) {
                trunc += mag;
                break;
            }
            prev = mag;
            V t = trig_power_tail(pt.use_sin, theta, m, head);
            s += (pt.coef * ak * std::pow(X, -order)) * t;
        }
    }
    s.err_bound += trunc;
    return s;
}

V periodic_sum(double x, bool use_sin, const std::function<SeriesJet(const SeriesJet&)>& h) {
    long v = 0, u = 0;
    for (long q = 1; q <= 64; ++q) {
        double r = x * double(q);
        if (std::fabs(r - std::round(r)) < 1e-12) {
            v = q;
            u = std::lround(r);
            break;
        }
    }
    if (v == 0) throw argument_error("periodic_sum: argument is not a rational with denominator <= 64");
    std::vector<double> c(v + 1);
    for (long r = 1; r <= v; ++r) {
        double arg = 2.0 * double((r * u) % v) / double(v);
        c[r] = use_sin ? sinpi(arg) : cospi(arg);
    }
    auto block = [c, v, h](const SeriesJet& m) {
        // sum over one period: n = m v + r, r = 1..v
        SeriesJet acc = SeriesJet::constant(0.0);
        for (long r = 1; r <= v; ++r)
            if (c[r] != 0.0) acc += c[r] * h(m * double(v) + double(r));
        return acc;
    };
    return sum_em([block](std::int64_t n) { return block(SeriesJet::constant(double(n - 1))).value(); },
                  [block](const SeriesJet& t) { return block(t - 1.0); });
}

V paired_limit(const std::function<V(double)>& R, double p0, double delta) {
    auto mean = [&](double d) {
        V a = R(p0 + d), b = R(p0 - d);
        return 0.5 * (a + b);
    };
    V A1 = mean(delta), A2 = mean(0.5 * delta);
    double v = (4.0 * A2.value - A1.value) / 3.0;
    double e = (4.0 * A2.err_bound + A1.err_bound) / 3.0 + std::fabs(A1.value - A2.value) * delta;
    return {v, e};
}

SeriesJet digamma_jet(const SeriesJet& z) {
    if (z.value() < 50.0) throw argument_error("digamma_jet: argument below the asymptotic range");
    SeriesJet inv = 1.0 / z;
    SeriesJet inv2 = inv * inv;
    SeriesJet acc = log(z) - 0.5 * inv;
    SeriesJet pw = inv2;
    for (int j = 1; j <= 8; ++j) {
        acc -= (bernoulli_number(2 * j) / (2.0 * j)) * pw;
        pw = pw * inv2;
    }
    return acc;
}

}  // namespace lgid::recipes
