#include "gintail/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "gintail/errors.hpp"
#include "gintail/log_space.hpp"
#include "gintail/quadrature.hpp"
#include "gintail/specfun.hpp"

namespace gintail::kernels {

namespace {

constexpr double kLogPi = 1.1447298858494001741;

double lq(double k, double x) { return specfun::gamma_pq_log(k, x).log_q; }

void check_n(int n, int min_n, const char* what) {
    if (n < min_n) throw std::invalid_argument(std::string(what) + ": n too small");
}

void check_t(double t, const char* what) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument(std::string(what) + ": t must be finite and > 0");
}

// log of the analytic bound  int_U^inf Q(k,u) du <= U / (U - k + 1) * Q(k,U),
// valid for U > k - 1 (integration by parts against the decreasing integrand).
double log_tail_int_q(double k, double U) {
    if (!(U > k - 1.0)) throw numerical_error("tail bound needs U > k - 1");
    return std::log(U / (U - k + 1.0)) + lq(k, U);
}

// Radius past which Q(k, n r^2) has dropped 80 nats below its value at the
// integration start, with enough margin for the tail bound to apply.
double expand_cutoff(int n, double t, double k) {
    const double base = std::max(t, 1.0);
    const double ref = lq(k, n * base * base);
    double b = base + 0.5;
    for (int it = 0; it < 300; ++it) {
        double u = static_cast<double>(n) * b * b;
        if (u > k + 50.0 + 8.0 * std::sqrt(k) && lq(k, u) < ref - 80.0) return b;
        b *= 1.2;
    }
    throw numerical_error("cutoff search failed");
}

// First point past the running maximum of log_f where it has dropped by
// `drop` nats; keeps the quadrature window's dynamic range bounded.
double trim_upper(const std::function<double(double)>& log_f, double a, double b, double drop) {
    const int steps = 1024;
    double best = neg_inf;
    for (int i = 1; i <= steps; ++i) {
        double x = a + (b - a) * i / steps;
        double v = log_f(x);
        if (v > best)
            best = v;
        else if (best != neg_inf && v < best - drop)
            return x;
    }
    return b;
}

// Shared driver: integrate exp(log_f) over [a, cutoff] and certify the
// discarded tail against log_tail, the log of an analytic bound on the mass
// beyond the trim point.
double certified_log_integral(const std::function<double(double)>& log_f, double a, int n,
                              double t, double k_cut, double rel_tol,
                              const std::function<double(double)>& log_tail_beyond) {
    const double b = expand_cutoff(n, t, k_cut);
    double beff = trim_upper(log_f, a, b, 70.0);
    for (int attempt = 0; attempt < 2; ++attempt) {
        auto q = quadrature::log_integrate(log_f, a, beff, rel_tol);
        double tail = log_tail_beyond(beff);
        if (tail <= q.log_value + std::log(rel_tol) - std::log(2.0)) return q.log_value;
        if (beff >= b) throw numerical_error("truncated tail not certifiable", std::exp(tail));
        beff = b;
    }
    throw numerical_error("truncated tail not certifiable");
}

// inner angular factor of the pair-count integrals:
// int sin(theta) erfcx(c r sin(theta)) d theta over [0, theta_max]
double angular_factor(double c, double r, double theta_max) {
    if (theta_max <= 0.0) return 0.0;
    auto f = [&](double th) {
        double s = std::sin(th);
        return s * specfun::erfcx(c * r * s);
    };
    return quadrature::integrate(f, 0.0, theta_max, 1e-11).value;
}

}  // namespace

double log_k_complex(int n, double re, double im) {
    check_n(n, 1, "log_k_complex");
    double r2 = re * re + im * im;
    return std::log(static_cast<double>(n)) - kLogPi + lq(n, n * r2);
}

double log_s_cc(int n, double re, double im) {
    check_n(n, 2, "log_s_cc");
    double y = std::fabs(im);
    if (y == 0.0) return neg_inf;
    double r2 = re * re + im * im;
    double c = std::sqrt(2.0 * n);
    return 0.5 * std::log(2.0) + 1.5 * std::log(static_cast<double>(n)) + std::log(y) -
           0.5 * kLogPi + std::log(specfun::erfcx(c * y)) + lq(n - 1, n * r2);
}

double log_s_rr(int n, double x) {
    check_n(n, 3, "log_s_rr");
    if (!std::isfinite(x)) throw std::invalid_argument("log_s_rr: x must be finite");
    double ax = std::fabs(x);
    double nx2 = n * ax * ax;
    double term1 = 0.5 * (std::log(0.5 * n) - kLogPi) + lq(n - 1, nx2);
    double term2 = neg_inf;
    if (ax > 0.0) {
        auto pq = specfun::gamma_pq_log(0.5 * (n - 1), 0.5 * nx2);
        term2 = 0.5 * n * std::log(static_cast<double>(n)) + (n - 1) * std::log(ax) -
                0.5 * nx2 - 0.5 * n * std::log(2.0) - std::lgamma(0.5 * n) + pq.log_p;
    }
    return log_add_exp(term1, term2);
}

double complex_kernel_mass(int n, double rel_tol) {
    check_n(n, 1, "complex_kernel_mass");
    auto log_g = [&](double r) {
        if (r <= 0.0) return neg_inf;
        return std::log(2.0 * n) + std::log(r) + lq(n, n * r * r);
    };
    auto tail = [&](double beff) { return log_tail_int_q(n, n * beff * beff); };
    return std::exp(certified_log_integral(log_g, 0.0, n, 0.0, n, rel_tol, tail));
}

double real_line_mass(int n, double rel_tol) {
    check_n(n, 3, "real_line_mass");
    auto log_g = [&](double x) { return log_s_rr(n, x); };
    auto tail = [&](double beff) {
        double U = n * beff * beff;
        // term1 tail: sqrt(n/2pi) / (2 n beff) * int_U^inf Q(n-1, u) du
        double t1 = 0.5 * (std::log(0.5 * n) - kLogPi) - std::log(2.0 * n * beff) +
                    log_tail_int_q(n - 1, U);
        // term2 tail collapses to (1/2) Q(n/2, U/2)
        double t2 = -std::log(2.0) + lq(0.5 * n, 0.5 * U);
        return log_add_exp(t1, t2);
    };
    double half = certified_log_integral(log_g, 0.0, n, 0.0, n - 1, rel_tol, tail);
    return 2.0 * std::exp(half);
}

double log_radial_count_complex(int n, double t, double rel_tol) {
    check_n(n, 1, "log_radial_count_complex");
    check_t(t, "log_radial_count_complex");
    auto log_g = [&](double r) {
        if (r <= 0.0) return neg_inf;
        return std::log(2.0 * n) + std::log(r) + lq(n, n * r * r);
    };
    auto tail = [&](double beff) { return log_tail_int_q(n, n * beff * beff); };
    return certified_log_integral(log_g, t, n, t, n, rel_tol, tail);
}

double log_rightmost_count_complex(int n, double t, double rel_tol) {
    check_n(n, 1, "log_rightmost_count_complex");
    check_t(t, "log_rightmost_count_complex");
    auto log_g = [&](double r) {
        if (r <= t) return neg_inf;
        double th = std::acos(std::min(t / r, 1.0));
        return std::log(2.0 * n) - kLogPi + std::log(th) + std::log(r) + lq(n, n * r * r);
    };
    // integrand <= the radial one, so the radial tail bound applies
    auto tail = [&](double beff) { return log_tail_int_q(n, n * beff * beff); };
    return certified_log_integral(log_g, t, n, t, n, rel_tol, tail);
}

double log_real_count_right(int n, double t, double rel_tol) {
    check_n(n, 3, "log_real_count_right");
    check_t(t, "log_real_count_right");
    auto log_g = [&](double x) { return log_s_rr(n, x); };
    auto tail = [&](double beff) {
        double U = n * beff * beff;
        double t1 = 0.5 * (std::log(0.5 * n) - kLogPi) - std::log(2.0 * n * beff) +
                    log_tail_int_q(n - 1, U);
        double t2 = -std::log(2.0) + lq(0.5 * n, 0.5 * U);
        return log_add_exp(t1, t2);
    };
    return certified_log_integral(log_g, t, n, t, n - 1, rel_tol, tail);
}

namespace {

// shared radial form of the pair counts: log of
//   sqrt(2) n^{3/2} / sqrt(pi) * r^2 * Q(n-1, n r^2) * angular_factor
double log_pair_radial(int n, double r, double theta_max) {
    double af = angular_factor(std::sqrt(2.0 * n), r, theta_max);
    if (af <= 0.0 || r <= 0.0) return neg_inf;
    return 0.5 * std::log(2.0) + 1.5 * std::log(static_cast<double>(n)) - 0.5 * kLogPi +
           2.0 * std::log(r) + lq(n - 1, n * r * r) + std::log(af);
}

// tail of either pair count beyond beff: S(z) <= (n/pi) Q(n-1, n|z|^2) since
// y erfcx(sqrt(2n) y) <= 1 / sqrt(2 pi n), so the half-annulus mass is at
// most (1/2) int_U^inf Q(n-1, u) du.
double pair_tail(int n, double beff) {
    return -std::log(2.0) + log_tail_int_q(n - 1, n * beff * beff);
}

}  // namespace

double log_pair_count_radius(int n, double t, double rel_tol) {
    check_n(n, 2, "log_pair_count_radius");
    check_t(t, "log_pair_count_radius");
    auto log_g = [&](double r) { return log_pair_radial(n, r, M_PI); };
    auto tail = [&](double beff) { return pair_tail(n, beff); };
    return certified_log_integral(log_g, t, n, t, n - 1, rel_tol, tail);
}

double log_pair_count_rightmost(int n, double t, double rel_tol) {
    check_n(n, 2, "log_pair_count_rightmost");
    check_t(t, "log_pair_count_rightmost");
    auto log_g = [&](double r) {
        if (r <= t) return neg_inf;
        return log_pair_radial(n, r, std::acos(std::min(t / r, 1.0)));
    };
    auto tail = [&](double beff) { return pair_tail(n, beff); };
    return certified_log_integral(log_g, t, n, t, n - 1, rel_tol, tail);
}

}  // namespace gintail::kernels
