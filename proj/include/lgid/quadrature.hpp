#pragma once

#include <cstddef>
#include <functional>

#include "lgid/value.hpp"

namespace lgid {

enum class Domain { finite, semi_infinite };

// Hints are advisory: the double-exponential maps already cluster nodes at
// both ends, so they only widen the node range toward the flagged side.
enum Singularity : unsigned { none = 0, log_at_left = 1, log_at_right = 2 };

struct IntegrandSpec {
    std::function<double(double)> evaluator;
    Domain domain = Domain::finite;
    double a = 0.0;
    double b = 1.0;  // ignored on semi-infinite domains
    unsigned singularity_hints = none;
    double target_abs_tol = 1e-11;
    std::size_t max_evaluations = 2'000'000;
};

struct QuadratureStats {
    int levels = 0;
    std::size_t evaluations = 0;
};

// tanh-sinh on [a, b]
ValueWithError integrate_finite(const IntegrandSpec& spec, QuadratureStats* stats = nullptr);
// exp-sinh on [a, inf)
ValueWithError integrate_semi_infinite(const IntegrandSpec& spec, QuadratureStats* stats = nullptr);

// Run one fixed level only; exposed for the refinement tests.
ValueWithError integrate_finite_at_level(const IntegrandSpec& spec, int level);

// int_a^inf f for f oscillating with sign changes at first_zero + k*spacing.
// Each half period is integrated separately; the alternating partial sums
// are extrapolated by repeated averaging.
ValueWithError integrate_oscillatory(const std::function<double(double)>& f, double a, double first_zero,
                                     double spacing, double tol = 1e-11, int half_periods = 2000);

inline ValueWithError integrate(std::function<double(double)> f, double a, double b, double tol = 1e-11) {
    IntegrandSpec s;
    s.evaluator = std::move(f);
    s.a = a;
    s.b = b;
    s.target_abs_tol = tol;
    return integrate_finite(s);
}

inline ValueWithError integrate_to_inf(std::function<double(double)> f, double a, double tol = 1e-11) {
    IntegrandSpec s;
    s.evaluator = std::move(f);
    s.domain = Domain::semi_infinite;
    s.a = a;
    s.target_abs_tol = tol;
    return integrate_semi_infinite(s);
}

// log Gamma(1+x) cot(pi x) on (0, 1), finite at both ends.
double lgamma1p_cot_pi(double x);

}  // namespace lgid
