#include "lgid/series_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "lgid/errors.hpp"
#include "lgid/quadrature.hpp"
#include "lgid/specfun.hpp"

namespace lgid {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

struct Neumaier {
    double sum = 0.0, comp = 0.0, abs = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
        abs += std::fabs(x);
    }
    double value() const { return sum + comp; }
};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// theta / (2 pi) = u / v with v <= 64, if it is that close to a rational
bool rational_turn(double theta, long& u, long& v) {
    double r = theta / num::two_pi;
    r -= std::floor(r);
    for (long q = 1; q <= 64; ++q) {
        double x = r * q;
        double k = std::round(x);
        if (std::fabs(x - k) < 1e-11) {
            u = static_cast<long>(k) % q;
            v = q;
            return true;
        }
    }
    return false;
}

ValueWithError sum_direct(const SeriesSpec& spec, SeriesDiagnostics* diag) {
    const double q = spec.tail.decay_exponent;
    if (!(q > 1.0)) throw argument_error("sum_series: decay exponent must exceed 1");
    Neumaier s;
    for (std::int64_t n = 1; n <= spec.max_terms; ++n) {
        double t = spec.term(n);
        if (!std::isfinite(t)) throw domain_error("sum_series: term not finite");
        s.add(t);
        if (n >= 16 && (n % 64 == 0 || n == spec.max_terms)) {
            // tail of a C n^-q law beyond n, with a 1/n relative uncertainty
            double tail = t * (double(n) / (q - 1.0) - 0.5);
            double err = std::fabs(tail) * (2.0 * q + 2.0) / double(n) + 4 * eps * s.abs;
            if (err <= spec.target_abs_tol || n == spec.max_terms) {
                if (diag) diag->terms_used = n;
                if (err > spec.target_abs_tol)
                    throw convergence_error("sum_series: direct summation did not reach the tolerance");
                return {s.value() + tail, err};
            }
        }
    }
    throw convergence_error("sum_series: no terms");
}

ValueWithError sum_em(const SeriesSpec& spec, SeriesDiagnostics* diag) {
    if (!spec.tail.smooth_extension) throw argument_error("sum_series: Euler-Maclaurin needs a smooth extension");
    const std::int64_t N = std::min<std::int64_t>(10000, spec.max_terms);
    Neumaier head;
    for (std::int64_t n = N - 1; n >= 1; --n) head.add(spec.term(n));
    const auto& ext = spec.tail.smooth_extension;
    SeriesJet J = ext(SeriesJet::variable(double(N)));
    // B_2 .. B_8 corrections; c[k] = f^(k)/k!, so B_2j/(2j)! f^(2j-1) = B_2j/(2j) c[2j-1]
    double corr = 0.0;
    for (int j = 1; j <= 4; ++j) corr += bernoulli_number(2 * j) / (2 * j) * J.c[2 * j - 1];
    double next = std::fabs(bernoulli_number(10) / 10 * J.c[9]);
    IntegrandSpec is;
    is.evaluator = [&](double t) { return ext(SeriesJet::constant(t)).value(); };
    is.domain = Domain::semi_infinite;
    is.a = double(N);
    is.target_abs_tol = std::max(spec.target_abs_tol * 0.1, 1e-16);
    ValueWithError integral = integrate_semi_infinite(is);
    double v = head.value() + integral.value + 0.5 * J.c[0] - corr;
    double e = integral.err_bound + next + 4 * eps * (head.abs + std::fabs(integral.value));
    if (diag) diag->terms_used = N;
    return {v, e};
}

ValueWithError sum_alternating(const SeriesSpec& spec, SeriesDiagnostics* diag) {
    const std::int64_t N = std::min<std::int64_t>(400, spec.max_terms);
    if (N < 60) throw argument_error("sum_series: alternating acceleration needs at least 60 terms");
    std::vector<double> partial;
    partial.reserve(N);
    Neumaier s;
    for (std::int64_t n = 1; n <= N; ++n) {
        s.add(spec.term(n));
        partial.push_back(s.value());
    }
    ValueWithError full = average_partial_sums(partial);
    std::vector<double> half(partial.begin(), partial.begin() + N / 2);
    ValueWithError coarse = average_partial_sums(half);
    if (diag) diag->terms_used = N;
    return {full.value, full.err_bound + std::fabs(full.value - coarse.value) + 4 * eps * s.abs};
}

ValueWithError sum_asymptotic(const SeriesSpec& spec, SeriesDiagnostics* diag) {
    if (!spec.tail.tail_closed_form) throw argument_error("sum_series: asymptotic strategy needs a tail");
    const std::int64_t N = spec.tail.head;
    Neumaier head;
    for (std::int64_t n = N; n >= 1; --n) head.add(spec.term(n));
    ValueWithError tail = spec.tail.tail_closed_form(N);
    if (diag) diag->terms_used = N;
    return ValueWithError{head.value(), 4 * eps * head.abs} + tail;
}

}  // namespace

double decay_probe(const std::function<double(std::int64_t)>& term) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (int i = 0; i < 20; ++i) {
        auto n = static_cast<std::int64_t>(std::llround(100.0 * std::pow(10.0, i / 19.0)));
        double t = std::fabs(term(n));
        if (!(t > 0.0) || !std::isfinite(t)) continue;
        double x = std::log(double(n)), y = std::log(t);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 5) return std::numeric_limits<double>::quiet_NaN();
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return -slope;
}

ValueWithError sum_series(const SeriesSpec& spec, SeriesDiagnostics* diag) {
    if (!spec.term) throw argument_error("sum_series: empty term");
    if (!(spec.target_abs_tol > 0.0) || spec.max_terms < 1) throw argument_error("sum_series: invalid limits");
    using V = TailStrategy::Variant;
    SeriesDiagnostics local;
    SeriesDiagnostics& d = diag ? *diag : local;
    d = SeriesDiagnostics{};
    d.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
    if (spec.tail.variant == V::direct_with_bound) {
        d.fitted_exponent = decay_probe(spec.term);
        if (!(std::fabs(d.fitted_exponent - spec.tail.decay_exponent) <= 0.3)) {
            d.strategy_mismatch = true;
            char msg[128];
            std::snprintf(msg, sizeof msg, "strategy mismatch: declared decay %.3g, probe fitted %.3g",
                          spec.tail.decay_exponent, d.fitted_exponent);
            d.warning = msg;
        }
    }
    switch (spec.tail.variant) {
        case V::direct_with_bound: return sum_direct(spec, &d);
        case V::euler_maclaurin: return sum_em(spec, &d);
        case V::alternating_acceleration: return sum_alternating(spec, &d);
        case V::asymptotic_analytic: return sum_asymptotic(spec, &d);
    }
    throw argument_error("sum_series: unknown strategy");
}

ValueWithError average_partial_sums(const std::vector<double>& partial, int depth) {
    if (depth < 2 || partial.size() < std::size_t(depth + 1))
        throw argument_error("average_partial_sums: not enough partial sums");
    std::vector<double> w(partial.end() - (depth + 1), partial.end());
    double before = w[0];
    for (int d = 0; d < depth; ++d) {
        for (std::size_t i = 0; i + 1 < w.size() - d; ++i) w[i] = 0.5 * (w[i] + w[i + 1]);
        if (d == depth - 2) before = w[0];
    }
    return {w[0], std::fabs(w[0] - before)};
}

ValueWithError trig_power_tail(bool use_sin, double theta, int m, std::int64_t N) {
    if (m < 1) throw argument_error("trig_power_tail: power must be positive");
    long u = 0, v = 1;
    if (rational_turn(theta, u, v)) {
        // residue classes n = j (mod v) carry trig(2 pi j u / v)
        ValueWithError s{0.0, 0.0};
        double trig_sum = 0.0, trig_abs = 0.0;
        for (long j = 0; j < v; ++j) {
            std::int64_t nj = N + 1 + ((j - (N + 1)) % v + v) % v;
            double arg = 2.0 * double((j * u) % v) / double(v);
            double tr = use_sin ? sinpi(arg) : cospi(arg);
            trig_sum += tr;
            trig_abs += std::fabs(tr);
            if (tr == 0.0) continue;
            double a = double(nj) / double(v);
            if (m == 1)
                s += -tr / double(v) * digamma(a);
            else
                s += tr * std::pow(double(v), -m) * hurwitz_zeta(double(m), a);
        }
        if (m == 1 && std::fabs(trig_sum) > 1e-12 * std::max(1.0, trig_abs))
            throw argument_error("trig_power_tail: divergent tail (nonzero mean with power 1)");
        return s;
    }
    double r = theta / num::two_pi;
    r -= std::floor(r);
    bool closed = use_sin ? (m % 2 == 1) : (m % 2 == 0);
    if (closed && m <= 12) {
        int j = use_sin ? (m - 1) / 2 : m / 2;
        double sign = ((j + 1) % 2) ? -1.0 : 1.0;
        double full = sign * std::pow(num::two_pi, m) * bernoulli_poly(m, r) / (2.0 * factorial(m));
        double head = 0.0, abs_head = 0.0;
        for (std::int64_t n = 1; n <= N; ++n) {
            double x = n * theta;
            double t = (use_sin ? std::sin(x) : std::cos(x)) * std::pow(double(n), -m);
            head += t;
            abs_head += std::fabs(t);
        }
        double v2 = full - head;
        // bernoulli_poly at large degree amplifies rounding in r
        return {v2, 16 * eps * (std::fabs(full) * (1.0 + m) + abs_head) + std::pow(num::two_pi, m) / factorial(m) * eps};
    }
    if (m >= 3) {
        // Abel summation: partial trig sums are bounded by 1/|sin(theta/2)|
        double b = 1.0 / std::fabs(std::sin(0.5 * theta));
        double M = std::ceil(std::pow(2.0 * b / 1e-17, 1.0 / m));
        if (M > 2e7) throw argument_error("trig_power_tail: tail too slow for direct summation");
        std::int64_t last = std::max<std::int64_t>(N + 1, static_cast<std::int64_t>(M));
        Neumaier s;
        for (std::int64_t n = last; n > N; --n) {
            double x = n * theta;
            s.add((use_sin ? std::sin(x) : std::cos(x)) * std::pow(double(n), -m));
        }
        return {s.value(), 2.0 * b * std::pow(double(last), -m) + 4 * eps * s.abs};
    }
    throw argument_error("trig_power_tail: no tail method for this scale and power");
}

LatticeWeight power_weight(int exponent) {
    LatticeWeight w;
    w.exact = [exponent](double n) { return std::pow(n, -exponent); };
    w.expansion = {{1.0, double(exponent)}};
    return w;
}

LatticeWeight rational_weight(double p, int power) {
    if (power != 1) throw argument_error("rational_weight: only the first power is supported");
    for (long n = std::max(1L, long(std::floor(p / 2)) - 1); n <= long(std::ceil(p / 2)) + 1; ++n)
        if (std::fabs(4.0 * n * n - p * p) < 1e-8)
            throw argument_error("rational_weight: 4n^2 - p^2 vanishes");
    LatticeWeight w;
    w.exact = [p](double n) { return 1.0 / (n * (4.0 * n * n - p * p)); };
    // 1/(n(4n^2-p^2)) = sum_j p^(2j) / 4^(j+1) n^-(2j+3)
    double c = 0.25;
    for (int j = 0; j < 40; ++j) {
        w.expansion.push_back({c, 2.0 * j + 3.0});
        c *= p * p / 4.0;
        if (c < 1e-30) break;
    }
    return w;
}

ValueWithError sum_lattice(LatticeFn fn, double X, const LatticeWeight& w, bool alternating, int head) {
    if (!(X > 0.0) || !std::isfinite(X)) throw argument_error("sum_lattice: scale must be positive");
    if (head < 8) throw argument_error("sum_lattice: head too short");
    ValueWithError s{0.0, 0.0};
    double magnitude = 0.0;  // sum of |terms| for the rounding floor
    // When the tail snaps X to a rational turn, the head still samples n*X.
    // |Ci'|, |si'| <= 1/x, so node n is off by at most |w_n| * shift / X.
    double shift = 0.0, weight_abs = 0.0;
    long su = 0, sv = 1;
    if ((fn == LatticeFn::Ci || fn == LatticeFn::si) && rational_turn(X, su, sv)) {
        double turns = std::round(X / num::two_pi - double(su) / double(sv));
        double snapped = num::two_pi * (turns + double(su) / double(sv));
        shift = std::fabs(X - snapped) + 2 * eps * X;
    }
    for (int n = head; n >= 1; --n) {
        double x = n * X;
        ValueWithError F;
        switch (fn) {
            case LatticeFn::Ci: F = cos_integral_Ci(x); break;
            case LatticeFn::si: F = si_lower(x); break;
            case LatticeFn::aux_f: F = aux_f(x); break;
            case LatticeFn::aux_g: F = aux_g(x); break;
        }
        double wn = w.exact(double(n));
        if (alternating && (n % 2)) wn = -wn;
        s += wn * F;
        magnitude += std::fabs(wn * F.value);
        weight_abs += std::fabs(wn);
    }
    s.err_bound += weight_abs * shift / X;

    // F(x) in terms of f ~ sum (-1)^k (2k)!/x^(2k+1) and g ~ sum (-1)^k (2k+1)!/x^(2k+2):
    // Ci = f sin - g cos, si = -f cos - g sin, aux_f = f, aux_g = g.
    struct Part {
        bool use_sin;
        double sign;
    };
    Part fpart{false, 0.0}, gpart{false, 0.0};
    double theta = alternating ? num::pi : 0.0;
    switch (fn) {
        case LatticeFn::Ci: fpart = {true, 1.0}; gpart = {false, -1.0}; theta += X; break;
        case LatticeFn::si: fpart = {false, -1.0}; gpart = {true, -1.0}; theta += X; break;
        case LatticeFn::aux_f: fpart = {false, 1.0}; break;
        case LatticeFn::aux_g: gpart = {false, 1.0}; break;
    }
    const double xN = head * X;
    double trunc = 0.0;
    for (const auto& [c, e] : w.expansion) {
        for (int part = 0; part < 2; ++part) {
            const Part& P = part == 0 ? fpart : gpart;
            if (P.sign == 0.0) continue;
            double prev = std::numeric_limits<double>::infinity();
            for (int k = 0;; ++k) {
                int order = 2 * k + 1 + part;  // power of 1/x
                double ak = ((k % 2) ? -1.0 : 1.0) * factorial(2 * k + part);
                int m = order + int(e);
                // size of this correction summed over the tail
                double mag = std::fabs(c * ak) * std::pow(xN, -order) * double(head) / (m - 1 > 0 ? m - 1 : 1);
                if (mag < 1e-22 || mag > prev || k > 30) {
                    trunc += mag;
                    break;
                }
                prev = mag;
                ValueWithError t = trig_power_tail(P.use_sin, theta, m, head);
                ValueWithError term = (P.sign * c * ak * std::pow(X, -order)) * t;
                s += term;
                magnitude += std::fabs(term.value);
            }
        }
    }
    s.err_bound += trunc + 8 * eps * magnitude;
    return s;
}

ValueWithError sum_ci_lattice(double scale, int weight_exponent, bool alternating, int head) {
    if (weight_exponent < 0 || weight_exponent > 2) throw argument_error("sum_ci_lattice: weight exponent must be 0, 1 or 2");
    return sum_lattice(LatticeFn::Ci, scale, power_weight(weight_exponent), alternating, head);
}

ValueWithError sum_si_lattice(double scale, SiWeight weight, bool alternating, double p, int head) {
    LatticeWeight w = weight == SiWeight::inv_n ? power_weight(1) : rational_weight(p);
    return sum_lattice(LatticeFn::si, scale, w, alternating, head);
}

ValueWithError sum_log_weighted(double p, bool squared) {
    if (!std::isfinite(p)) throw argument_error("sum_log_weighted: p must be finite");
    long near = std::max(1L, std::lround(std::fabs(p) / 2));
    for (long n = std::max(1L, near - 1); n <= near + 1; ++n)
        if (std::fabs(4.0 * n * n - p * p) < 1e-8) throw argument_error("sum_log_weighted: 4n^2 - p^2 vanishes");
    const std::int64_t N = 10000;
    Neumaier head;
    for (std::int64_t n = N; n >= 2; --n) {
        double d = 4.0 * double(n) * double(n) - p * p;
        head.add(std::log(double(n)) / (squared ? d * d : d));
    }
    // tail: 1/(4n^2-p^2) = sum_j p^(2j)/4^(j+1) n^-(2j+2), squared gives (j+1) p^(2j)/4^(j+2) n^-(2j+4),
    // and sum_{n>N} log n / n^m = -zeta'(m, N+1)
    ValueWithError tail{0.0, 0.0};
    double c = squared ? 1.0 / 16.0 : 0.25;
    for (int j = 0; j < 30; ++j) {
        double coef = squared ? c * (j + 1) : c;
        int m = squared ? 2 * j + 4 : 2 * j + 2;
        ValueWithError z = hurwitz_zeta_sderiv(double(m), double(N + 1));
        tail -= coef * z;
        if (std::fabs(coef * z.value) < 1e-30) break;
        c *= p * p / 4.0;
    }
    return ValueWithError{head.value(), 4 * eps * head.abs} + tail;
}

}  // namespace lgid
