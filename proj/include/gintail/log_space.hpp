#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>

namespace gintail {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// A signed quantity carried as log|value| plus a sign, so that terms like
// e^{-n(t^2 - 2 log t - 1)} never overflow or underflow on the way through a
// formula.  sign == 0 means exactly zero and log_abs is ignored.
struct LogValue {
    double log_abs = neg_inf;
    int sign = 0;

    static LogValue zero() { return {neg_inf, 0}; }

    static LogValue from_log(double log_abs, int sign = +1) {
        if (sign == 0 || log_abs == neg_inf) return zero();
        return {log_abs, sign > 0 ? +1 : -1};
    }

    static LogValue from_value(double v) {
        if (v == 0.0) return zero();
        return {std::log(std::fabs(v)), v > 0 ? +1 : -1};
    }

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
    bool is_zero() const { return sign == 0; }
};

// log(e^a + e^b) for a, b possibly -inf.
inline double log_add_exp(double a, double b) {
    if (a == neg_inf) return b;
    if (b == neg_inf) return a;
    double hi = a > b ? a : b;
    double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

// log(e^a - e^b), requires a >= b.
inline double log_sub_exp(double a, double b) {
    if (b == neg_inf) return a;
    if (!(a >= b)) throw std::invalid_argument("log_sub_exp: requires a >= b");
    if (a == b) return neg_inf;
    return a + std::log(-std::expm1(b - a));
}

// log(1 - e^x) for x <= 0, stable on both ends.
inline double log1m_exp(double x) {
    if (x > 0.0) throw std::invalid_argument("log1m_exp: requires x <= 0");
    if (x == 0.0) return neg_inf;
    // switch at log(1/2); see Maechler's log1mexp note
    if (x > -0.6931471805599453) return std::log(-std::expm1(x));
    return std::log1p(-std::exp(x));
}

// log sum of exponentials over a span, summed in index order so the result is
// independent of any parallel fill that produced the terms.
inline double log_sum_exp(std::span<const double> terms) {
    double hi = neg_inf;
    for (double t : terms)
        if (t > hi) hi = t;
    if (hi == neg_inf) return neg_inf;
    double acc = 0.0, comp = 0.0;  // Kahan
    for (double t : terms) {
        double y = std::exp(t - hi) - comp;
        double s = acc + y;
        comp = (s - acc) - y;
        acc = s;
    }
    return hi + std::log(acc);
}

inline LogValue operator*(LogValue a, LogValue b) {
    if (a.sign == 0 || b.sign == 0) return LogValue::zero();
    return {a.log_abs + b.log_abs, a.sign * b.sign};
}

inline LogValue operator+(LogValue a, LogValue b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    if (a.sign == b.sign) return {log_add_exp(a.log_abs, b.log_abs), a.sign};
    if (a.log_abs == b.log_abs) return LogValue::zero();
    const LogValue& hi = a.log_abs > b.log_abs ? a : b;
    const LogValue& lo = a.log_abs > b.log_abs ? b : a;
    return {log_sub_exp(hi.log_abs, lo.log_abs), hi.sign};
}

}  // namespace gintail
