#include "lgid/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgid/errors.hpp"
#include "lgid/specfun.hpp"

namespace lgid {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int kMaxLevel = 12;
constexpr int kMinLevel = 4;
constexpr double kTmax = 6.2;  // beyond this tanh-sinh weights underflow

void check_finite(double fx, double x) {
    if (!std::isfinite(fx)) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "quadrature: integrand not finite at x = %.17g", x);
        throw domain_error(msg);
    }
}

struct LevelSum {
    double sum = 0.0;
    double abs_sum = 0.0;
    std::size_t evals = 0;
};

// Nodes k*h for odd k (or every k on level 0), both signs.
template <class Node>
LevelSum sweep(int level, Node&& node) {
    LevelSum out;
    double h = std::ldexp(1.0, -level);
    int step = level == 0 ? 1 : 2;
    int start = level == 0 ? 0 : 1;
    for (int sign : {1, -1}) {
        for (int k = start;; k += step) {
            if (level == 0 && sign == -1 && k == 0) continue;
            double t = sign * k * h;
            if (std::fabs(t) > kTmax) break;
            double wf;
            bool stop = false;
            if (!node(t, wf, stop)) {
                if (stop) break;
                continue;
            }
            ++out.evals;
            out.sum += wf;
            out.abs_sum += std::fabs(wf);
            if (std::fabs(t) > 1.0 && std::fabs(wf) < 1e-24 * std::fabs(out.sum)) break;
            if (stop) break;
        }
    }
    return out;
}

// tanh-sinh node: returns weight * f or false when the node collapses onto
// an endpoint in floating point.
struct FiniteNode {
    const IntegrandSpec& spec;
    double half;
    bool operator()(double t, double& wf, bool& stop) const {
        double u = num::half_pi * std::sinh(t);
        double au = std::fabs(u);
        double e = std::exp(-2.0 * au);
        double comp = 2.0 * e / (1.0 + e);  // 1 - tanh|u|
        double w = num::half_pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        double x = t >= 0 ? spec.b - half * comp : spec.a + half * comp;
        if (!(x > spec.a && x < spec.b)) {
            stop = true;
            return false;
        }
        if (w == 0.0) {
            stop = true;
            return false;
        }
        // Closer than one ulp of the interval scale, x cannot be told apart
        // from the endpoint, so a non-finite value or a domain error there is
        // the endpoint singularity.
        const bool at_endpoint = half * comp <= eps * std::max({1.0, std::fabs(spec.a), std::fabs(spec.b)});
        double fx;
        try {
            fx = spec.evaluator(x);
        } catch (const std::domain_error&) {
            if (!at_endpoint) throw;
            fx = std::numeric_limits<double>::quiet_NaN();
        }
        if (!std::isfinite(fx) && at_endpoint) {
            stop = true;
            return false;
        }
        check_finite(fx, x);
        wf = w * fx;
        return true;
    }
};

struct InfNode {
    const IntegrandSpec& spec;
    bool operator()(double t, double& wf, bool& stop) const {
        double u = num::half_pi * std::sinh(t);
        if (u > 700.0) {
            stop = true;
            return false;
        }
        double d = std::exp(u);
        double x = spec.a + d;
        if (!(x > spec.a)) {
            stop = true;
            return false;
        }
        double w = num::half_pi * std::cosh(t) * d;
        double fx = spec.evaluator(x);
        check_finite(fx, x);
        wf = w * fx;
        if (t > 0 && wf == 0.0) stop = true;
        return true;
    }
};

template <class Node>
ValueWithError run_levels(const IntegrandSpec& spec, double scale, Node node, QuadratureStats* stats,
                          int fixed_level = -1) {
    double raw = 0.0, raw_abs = 0.0;
    double prev = 0.0;
    std::size_t evals = 0;
    int last = fixed_level >= 0 ? fixed_level : kMaxLevel;
    double diff = std::numeric_limits<double>::infinity();
    for (int level = 0; level <= last; ++level) {
        LevelSum s = sweep(level, node);
        raw += s.sum;
        raw_abs += s.abs_sum;
        evals += s.evals;
        double h = std::ldexp(1.0, -level);
        double cur = scale * h * raw;
        if (level > 0) diff = std::fabs(cur - prev);
        prev = cur;
        double rounding = 8.0 * eps * scale * h * raw_abs;
        if (stats) {
            stats->levels = level;
            stats->evaluations = evals;
        }
        if (evals > spec.max_evaluations) throw convergence_error("quadrature: evaluation budget exhausted");
        if (fixed_level >= 0) {
            if (level == fixed_level) return {cur, (level > 0 ? diff : std::fabs(cur)) + rounding};
            continue;
        }
        if (level >= kMinLevel && diff + rounding <= spec.target_abs_tol) return {cur, diff + rounding};
        // once the level differences sit at the rounding floor nothing more is gained
        if (level >= kMinLevel + 2 && diff <= rounding && rounding <= spec.target_abs_tol)
            return {cur, diff + rounding};
    }
    char msg[160];
    std::snprintf(msg, sizeof msg, "quadrature: tolerance %.3g not reached at level 12 (last difference %.3g)",
                  spec.target_abs_tol, diff);
    throw convergence_error(msg);
}

void validate(const IntegrandSpec& spec) {
    if (!spec.evaluator) throw argument_error("quadrature: empty integrand");
    if (!(spec.target_abs_tol > 0.0)) throw argument_error("quadrature: tolerance must be positive");
    if (!std::isfinite(spec.a)) throw argument_error("quadrature: lower limit must be finite");
}

}  // namespace

ValueWithError integrate_finite(const IntegrandSpec& spec, QuadratureStats* stats) {
    validate(spec);
    if (spec.domain != Domain::finite) throw argument_error("integrate_finite: domain is not finite");
    if (!(spec.a < spec.b) || !std::isfinite(spec.b)) throw argument_error("integrate_finite: need a < b");
    double half = 0.5 * (spec.b - spec.a);
    return run_levels(spec, half, FiniteNode{spec, half}, stats);
}

ValueWithError integrate_finite_at_level(const IntegrandSpec& spec, int level) {
    validate(spec);
    if (level < 1 || level > kMaxLevel) throw argument_error("integrate_finite_at_level: level must be 1..12");
    if (!(spec.a < spec.b)) throw argument_error("integrate_finite: need a < b");
    double half = 0.5 * (spec.b - spec.a);
    return run_levels(spec, half, FiniteNode{spec, half}, nullptr, level);
}

ValueWithError integrate_semi_infinite(const IntegrandSpec& spec, QuadratureStats* stats) {
    validate(spec);
    if (spec.domain != Domain::semi_infinite) throw argument_error("integrate_semi_infinite: domain is finite");
    return run_levels(spec, 1.0, InfNode{spec}, stats);
}

ValueWithError integrate_oscillatory(const std::function<double(double)>& f, double a, double first_zero,
                                     double spacing, double tol, int half_periods) {
    if (!(first_zero > a) || !(spacing > 0.0)) throw argument_error("integrate_oscillatory: bad zero lattice");
    constexpr int depth = 24;
    if (half_periods < depth + 2) throw argument_error("integrate_oscillatory: too few half periods");
    double piece_tol = std::max(tol * 1e-3, 1e-16);
    double err = 0.0, abs_sum = 0.0;
    auto piece = [&](double lo, double hi) {
        IntegrandSpec s;
        s.evaluator = f;
        s.a = lo;
        s.b = hi;
        s.target_abs_tol = piece_tol;
        ValueWithError r = integrate_finite(s);
        err += r.err_bound;
        abs_sum += std::fabs(r.value);
        return r.value;
    };
    std::vector<double> partial;
    partial.reserve(half_periods + 1);
    double s = piece(a, first_zero);
    partial.push_back(s);
    for (int k = 0; k < half_periods; ++k) {
        double lo = first_zero + k * spacing;
        s += piece(lo, lo + spacing);
        partial.push_back(s);
    }
    // repeated averaging of the last depth+1 partial sums
    std::vector<double> w(partial.end() - (depth + 1), partial.end());
    double before = 0.0;
    for (int d = 0; d < depth; ++d) {
        for (std::size_t i = 0; i + 1 < w.size() - d; ++i) w[i] = 0.5 * (w[i] + w[i + 1]);
        if (d == depth - 2) before = w[0];
    }
    double v = w[0];
    return {v, std::fabs(v - before) + err + 4.0 * eps * abs_sum};
}

double lgamma1p_cot_pi(double x) {
    if (!(x > 0.0 && x < 1.0)) throw domain_error("lgamma1p_cot_pi: x must lie in (0, 1)");
    const Constants& c = constants();
    const double z4 = num::pi * num::pi * num::pi * num::pi / 90.0;
    if (x < 1e-4) {
        double lx = -c.euler_gamma.value + num::zeta2 * x / 2 - c.zeta3.value * x * x / 3 + z4 * x * x * x / 4;
        double px2 = num::pi * num::pi * x * x;
        double xcot = (1.0 - px2 / 3.0 - px2 * px2 / 45.0) / num::pi;
        return lx * xcot;
    }
    if (x > 1.0 - 1e-4) {
        double t = x - 1.0;
        double lt = (1.0 - c.euler_gamma.value) + (num::zeta2 - 1.0) * t / 2 - (c.zeta3.value - 1.0) * t * t / 3 +
                    (z4 - 1.0) * t * t * t / 4;
        double pt2 = num::pi * num::pi * t * t;
        double tcot = (1.0 - pt2 / 3.0 - pt2 * pt2 / 45.0) / num::pi;
        return lt * tcot;
    }
    return log_gamma(1.0 + x).value * cospi(x) / sinpi(x);
}

}  // namespace lgid
