#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lgid/jet.hpp"
#include "lgid/value.hpp"

namespace lgid {

using SeriesJet = Jet<10>;

struct TailStrategy {
    enum class Variant { direct_with_bound, euler_maclaurin, alternating_acceleration, asymptotic_analytic };
    Variant variant = Variant::direct_with_bound;
    double decay_exponent = 2.0;                                  // direct_with_bound
    std::function<SeriesJet(const SeriesJet&)> smooth_extension;  // euler_maclaurin
    std::function<ValueWithError(std::int64_t)> tail_closed_form; // asymptotic_analytic: sum over n > N
    std::int64_t head = 64;                                       // asymptotic_analytic head length

    static TailStrategy direct(double q) {
        TailStrategy t;
        t.decay_exponent = q;
        return t;
    }
    static TailStrategy euler_maclaurin(std::function<SeriesJet(const SeriesJet&)> ext) {
        TailStrategy t;
        t.variant = Variant::euler_maclaurin;
        t.smooth_extension = std::move(ext);
        return t;
    }
    static TailStrategy alternating() {
        TailStrategy t;
        t.variant = Variant::alternating_acceleration;
        return t;
    }
    static TailStrategy asymptotic(std::function<ValueWithError(std::int64_t)> tail, std::int64_t head = 64) {
        TailStrategy t;
        t.variant = Variant::asymptotic_analytic;
        t.tail_closed_form = std::move(tail);
        t.head = head;
        return t;
    }
};

struct SeriesSpec {
    std::function<double(std::int64_t)> term;  // n >= 1
    TailStrategy tail;
    double target_abs_tol = 1e-12;
    std::int64_t max_terms = 1'000'000;
};

struct SeriesDiagnostics {
    std::int64_t terms_used = 0;
    double fitted_exponent = 0.0;  // from the decay probe, NaN if not run
    bool strategy_mismatch = false;
    std::string warning;
};

ValueWithError sum_series(const SeriesSpec& spec, SeriesDiagnostics* diag = nullptr);

// Least-squares slope of -log|term(n)| against log n on n in [100, 1000].
double decay_probe(const std::function<double(std::int64_t)>& term);

// Lattice sums sum_{n>=1} (+-1)^n w(n) F(n * scale) of the sine/cosine
// integral family. Heads are exact; tails come from the asymptotic
// expansions of F, whose trigonometric factors are periodic on rational
// lattices (Hurwitz zeta tails) or have Bernoulli-polynomial closed forms.
enum class LatticeFn { Ci, si, aux_f, aux_g };

struct LatticeWeight {
    std::function<double(double)> exact;               // w(n)
    std::vector<std::pair<double, double>> expansion;  // w(n) = sum c n^-e for n beyond the head
};

LatticeWeight power_weight(int exponent);             // n^-exponent
LatticeWeight rational_weight(double p, int power = 1);  // 1 / (n (4n^2 - p^2))^power for power 1

ValueWithError sum_lattice(LatticeFn fn, double scale, const LatticeWeight& w, bool alternating, int head = 64);

ValueWithError sum_ci_lattice(double scale, int weight_exponent, bool alternating, int head = 64);

enum class SiWeight { inv_n, inv_n_4n2_p2 };
ValueWithError sum_si_lattice(double scale, SiWeight weight, bool alternating, double p = 0.0, int head = 64);

// sum log n / (4n^2 - p^2), or with the denominator squared
ValueWithError sum_log_weighted(double p, bool squared);

// sum_{n > N} trig(n theta) / n^m with trig = sin or cos, m >= 1
ValueWithError trig_power_tail(bool use_sin, double theta, int m, std::int64_t N);

// Repeated averaging of consecutive partial sums; returns the extrapolated
// limit of an alternating series given its partial sums.
ValueWithError average_partial_sums(const std::vector<double>& partial, int depth = 24);

}  // namespace lgid
