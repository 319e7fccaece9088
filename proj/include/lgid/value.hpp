#pragma once

#include <cmath>
#include <limits>

namespace lgid {

// A value and an absolute error estimate. The estimates propagate to first
// order; they are not certified intervals.
struct ValueWithError {
    double value = 0.0;
    double err_bound = 0.0;

    constexpr ValueWithError() = default;
    constexpr ValueWithError(double v, double e = 0.0) : value(v), err_bound(e) {}

    ValueWithError& operator+=(const ValueWithError& o) {
        value += o.value;
        err_bound += o.err_bound;
        return *this;
    }
    ValueWithError& operator-=(const ValueWithError& o) {
        value -= o.value;
        err_bound += o.err_bound;
        return *this;
    }
    ValueWithError& operator*=(const ValueWithError& o) {
        double e = std::fabs(value) * o.err_bound + std::fabs(o.value) * err_bound + err_bound * o.err_bound;
        value *= o.value;
        err_bound = e;
        return *this;
    }
    ValueWithError& operator/=(const ValueWithError& o) {
        double q = value / o.value;
        double e = (err_bound + std::fabs(q) * o.err_bound) / std::fabs(o.value);
        value = q;
        err_bound = e;
        return *this;
    }
};

inline ValueWithError operator+(ValueWithError a, const ValueWithError& b) { return a += b; }
inline ValueWithError operator-(ValueWithError a, const ValueWithError& b) { return a -= b; }
inline ValueWithError operator*(ValueWithError a, const ValueWithError& b) { return a *= b; }
inline ValueWithError operator/(ValueWithError a, const ValueWithError& b) { return a /= b; }
inline ValueWithError operator-(const ValueWithError& a) { return {-a.value, a.err_bound}; }

inline ValueWithError operator*(double c, const ValueWithError& a) { return {c * a.value, std::fabs(c) * a.err_bound}; }
inline ValueWithError operator*(const ValueWithError& a, double c) { return c * a; }
inline ValueWithError operator/(const ValueWithError& a, double c) { return {a.value / c, a.err_bound / std::fabs(c)}; }
inline ValueWithError operator+(const ValueWithError& a, double c) { return {a.value + c, a.err_bound}; }
inline ValueWithError operator+(double c, const ValueWithError& a) { return a + c; }
inline ValueWithError operator-(const ValueWithError& a, double c) { return {a.value - c, a.err_bound}; }
inline ValueWithError operator-(double c, const ValueWithError& a) { return {c - a.value, a.err_bound}; }

// Rounding of an exactly known real into a double.
inline ValueWithError exact(double v) {
    return {v, std::fabs(v) * std::numeric_limits<double>::epsilon()};
}

// First-order propagation through a smooth scalar map with derivative d.
inline ValueWithError apply(const ValueWithError& x, double fx, double d) {
    return {fx, std::fabs(d) * x.err_bound + std::fabs(fx) * std::numeric_limits<double>::epsilon()};
}

inline ValueWithError log(const ValueWithError& x) { return apply(x, std::log(x.value), 1.0 / x.value); }
inline ValueWithError exp(const ValueWithError& x) {
    double e = std::exp(x.value);
    return apply(x, e, e);
}
inline ValueWithError sin(const ValueWithError& x) { return apply(x, std::sin(x.value), std::cos(x.value)); }
inline ValueWithError cos(const ValueWithError& x) { return apply(x, std::cos(x.value), std::sin(x.value)); }

}  // namespace lgid
