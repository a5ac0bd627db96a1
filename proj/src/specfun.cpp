#include "gintail/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gintail/errors.hpp"

namespace gintail::specfun {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrt2 = 1.4142135623730950488;

void check_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite argument");
}

// log P(k,x) via the lower series P = x^k e^{-x}/Gamma(k+1) * sum_m x^m / ((k+1)...(k+m)).
double series_log_p(double k, double x) {
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 100000000; ++m) {
        term *= x / (k + m);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return k * std::log(x) - x - std::lgamma(k + 1.0) + std::log(sum);
}

// log Q(k,x) via the Lentz continued fraction for Gamma(k,x).
double cf_log_q(double k, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - k;
    double c = 1.0 / tiny;
    double d = 1.0 / (b == 0.0 ? tiny : b);
    double h = d;
    for (int i = 1; i < 100000000; ++i) {
        double an = -static_cast<double>(i) * (i - k);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return k * std::log(x) - x - std::lgamma(k) + std::log(h);
}

}  // namespace

GammaPQLog gamma_pq_log(double k, double x) {
    check_finite(k, "gamma_pq_log");
    check_finite(x, "gamma_pq_log");
    if (k <= 0.0) throw std::invalid_argument("gamma_pq_log: k must be > 0");
    if (x < 0.0) throw std::invalid_argument("gamma_pq_log: x must be >= 0");
    if (x == 0.0) return {neg_inf, 0.0};
    if (x < k + 1.0) {
        double lp = series_log_p(k, x);
        return {lp, log1m_exp(std::min(lp, 0.0))};
    }
    double lq = cf_log_q(k, x);
    return {log1m_exp(std::min(lq, 0.0)), lq};
}

double reg_gamma_q(double k, double x) {
    double q = std::exp(gamma_pq_log(k, x).log_q);
    return q > 1.0 ? 1.0 : q;
}

double reg_gamma_p(double k, double x) {
    double p = std::exp(gamma_pq_log(k, x).log_p);
    return p > 1.0 ? 1.0 : p;
}

std::vector<double> batch_log_q(int n, double x) {
    if (n < 1) throw std::invalid_argument("batch_log_q: n must be >= 1");
    std::vector<double> out(n);
#pragma omp parallel for schedule(dynamic, 256)
    for (int k = 1; k <= n; ++k) out[k - 1] = gamma_pq_log(k, x).log_q;
    return out;
}

std::vector<double> batch_log_q_serial(int n, double x) {
    if (n < 1) throw std::invalid_argument("batch_log_q_serial: n must be >= 1");
    check_finite(x, "batch_log_q_serial");
    if (x < 0.0) throw std::invalid_argument("batch_log_q_serial: x must be >= 0");
    std::vector<double> out(n);
    if (x == 0.0) {
        std::fill(out.begin(), out.end(), 0.0);
        return out;
    }
    double lq = -x;  // Q(1,x) = e^{-x}
    out[0] = lq;
    for (int k = 1; k < n; ++k) {
        double lt = k * std::log(x) - x - std::lgamma(k + 1.0);
        lq = log_add_exp(lq, lt);
        out[k] = std::min(lq, 0.0);
    }
    return out;
}

std::vector<double> batch_log_p(int n, double x) {
    if (n < 1) throw std::invalid_argument("batch_log_p: n must be >= 1");
    std::vector<double> out(n);
#pragma omp parallel for schedule(dynamic, 256)
    for (int k = 1; k <= n; ++k) out[k - 1] = gamma_pq_log(k, x).log_p;
    return out;
}

LogValue trunc_exp_log(std::int64_t n, double z) {
    if (n < 0) throw std::invalid_argument("trunc_exp_log: n must be >= 0");
    check_finite(z, "trunc_exp_log");
    if (z < 0.0) throw std::invalid_argument("trunc_exp_log: z must be >= 0");
    if (z == 0.0 || n == 0) return LogValue::from_log(0.0);

    const double logz = std::log(z);
    auto log_term = [&](std::int64_t k) { return k * logz - std::lgamma(k + 1.0); };

    // terms peak at k ~ z; only a window of width O(sqrt z) contributes
    std::int64_t k0 = std::clamp<std::int64_t>(static_cast<std::int64_t>(z), 0, n);
    double peak = log_term(k0);
    constexpr double cut = 45.0;

    double sum = 0.0, comp = 0.0;
    auto add = [&](double lt) {
        double y = std::exp(lt - peak) - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    };
    for (std::int64_t k = k0; k >= 0; --k) {
        double lt = log_term(k);
        if (lt < peak - cut) break;
        add(lt);
    }
    for (std::int64_t k = k0 + 1; k <= n; ++k) {
        double lt = log_term(k);
        if (lt < peak - cut) break;
        add(lt);
    }
    return LogValue::from_log(peak + std::log(sum));
}

double erfc(double x) {
    check_finite(x, "erfc");
    return std::erfc(x);
}

double erfcx(double x) {
    check_finite(x, "erfcx");
    if (x < 0.0) throw std::invalid_argument("erfcx: x must be >= 0");
    if (x < 4.0) {
        // erfc(x) >= erfc(4) ~ 1.5e-8 here, so the log composition is safe
        return std::exp(x * x + std::log(std::erfc(x)));
    }
    // Laplace continued fraction, backward recursion
    double u = 0.0;
    for (int m = 60; m >= 1; --m) u = (0.5 * m) / (x + u);
    return 1.0 / (kSqrtPi * (x + u));
}

double mu(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("mu: t must be finite and > 0");
    return std::sqrt(std::fabs(t - 1.0 - std::log(t)));
}

AsymptoticRegime asymptotic_regime(std::int64_t n, double t) {
    if (n < 1) throw std::invalid_argument("asymptotic_regime: n must be >= 1");
    return {t, n, mu(t)};
}

LogValue trunc_exp_asymptotic(std::int64_t n, double t, double guard) {
    if (n < 1) throw std::invalid_argument("trunc_exp_asymptotic: n must be >= 1");
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("trunc_exp_asymptotic: t must be finite and > 0");
    const double root_n = std::sqrt(static_cast<double>(n));
    if (std::fabs(t - 1.0) < guard / root_n)
        throw regime_error(
            "trunc_exp_asymptotic: t too close to 1; use exact summation in this regime");

    const double m = mu(t);
    // erfc-term in log space: log(mu t / (|t-1| sqrt 2)) + log erfcx - n mu^2
    double lc = std::log(m * t / (std::fabs(t - 1.0) * kSqrt2)) + std::log(erfcx(root_n * m)) -
                n * m * m;
    if (t > 1.0) return LogValue::from_log(lc);
    // t < 1: 1 minus an exponentially small correction
    return LogValue::from_log(log1m_exp(std::min(lc, 0.0)));
}

}  // namespace gintail::specfun
