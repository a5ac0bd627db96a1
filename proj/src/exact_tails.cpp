#include "gintail/exact_tails.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gintail/errors.hpp"
#include "gintail/kernels.hpp"
#include "gintail/log_space.hpp"
#include "gintail/quadrature.hpp"
#include "gintail/specfun.hpp"

namespace gintail::exact_tails {

namespace {

constexpr double kLog2 = 0.6931471805599453094;

void check_nt(int n, double t, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument(std::string(what) + ": t must be finite and > 0");
}

// Kahan sum in index order; the terms may have been filled in parallel but
// the reduction order is fixed, so results are thread-count independent.
double ordered_sum(const std::vector<double>& v) {
    double acc = 0.0, comp = 0.0;
    for (double x : v) {
        double y = x - comp;
        double s = acc + y;
        comp = (s - acc) - y;
        acc = s;
    }
    return acc;
}

}  // namespace

double kostlan_radius_log_cdf(int n, double t) {
    check_nt(n, t, "kostlan_radius_log_cdf");
    double x = static_cast<double>(n) * t * t;
    auto lps = specfun::batch_log_p(n, x);
    for (double& lp : lps) lp = std::min(lp, 0.0);
    return ordered_sum(lps);
}

KostlanTail kostlan_radius_tail(int n, double t) {
    check_nt(n, t, "kostlan_radius_tail");
    double x = static_cast<double>(n) * t * t;

    auto lqs = specfun::batch_log_q(n, x);
    double log_s = log_sum_exp(lqs);
    double max_lq = *std::max_element(lqs.begin(), lqs.end());

    KostlanTail out;
    out.log_upper = std::min(log_s, 0.0);
    // union minus pairs: S - S^2/2 = S (1 - S/2), positive for S < 2; a
    // single-event bound max_k Q_k covers the rest
    double pair_corrected = log_s < kLog2 ? log_s + std::log1p(-0.5 * std::exp(log_s)) : neg_inf;
    out.log_lower = std::max(std::min(max_lq, 0.0), pair_corrected);

    if (log_s < std::log(1e-12)) {
        // 1 - prod(1 - Q_k) equals S to double precision; only the bracket
        // distinguishes them, so the point value is flagged as the bound
        out.prob = {log_s, ProbKind::upper_bound};
        return out;
    }
    double log_cdf = kostlan_radius_log_cdf(n, t);
    out.prob = {log1m_exp(std::min(log_cdf, 0.0)), ProbKind::exact};
    return out;
}

double log_expected_count_radius(Beta beta, int n, double t, CountRoute route) {
    check_nt(n, t, "log_expected_count_radius");
    if (beta == Beta::complex) {
        double x = static_cast<double>(n) * t * t;
        switch (route) {
            case CountRoute::closed_form:
                return log_sum_exp(specfun::batch_log_q(n, x));
            case CountRoute::serial:
                return log_sum_exp(specfun::batch_log_q_serial(n, x));
            case CountRoute::quadrature:
                return kernels::log_radial_count_complex(n, t);
        }
    }
    if (n < 3)
        throw std::invalid_argument("log_expected_count_radius: real ensemble requires n >= 3");
    // both members of every exceeding pair, plus both real tails (symmetry)
    return log_add_exp(kLog2 + kernels::log_pair_count_radius(n, t),
                       kLog2 + kernels::log_real_count_right(n, t));
}

double log_expected_count_rightmost(Beta beta, int n, double t) {
    check_nt(n, t, "log_expected_count_rightmost");
    if (beta == Beta::complex) return kernels::log_rightmost_count_complex(n, t);
    if (n < 3)
        throw std::invalid_argument("log_expected_count_rightmost: real ensemble requires n >= 3");
    return log_add_exp(kLog2 + kernels::log_pair_count_rightmost(n, t),
                       kernels::log_real_count_right(n, t));
}

TailBracket tail_bracket(const TailQuery& q) {
    q.validate();
    double log_e;
    switch (q.statistic) {
        case Statistic::radius:
            log_e = log_expected_count_radius(q.ensemble, q.n, q.t);
            break;
        case Statistic::rightmost:
            log_e = log_expected_count_rightmost(q.ensemble, q.n, q.t);
            break;
        case Statistic::real_max:
            if (q.n < 3) throw std::invalid_argument("tail_bracket: real ensemble requires n >= 3");
            log_e = kernels::log_real_count_right(q.n, q.t);
            break;
        default:  // complex_max_modulus: count of exceeding conjugate pairs
            if (q.n < 3) throw std::invalid_argument("tail_bracket: real ensemble requires n >= 3");
            log_e = kernels::log_pair_count_radius(q.n, q.t);
            break;
    }
    TailBracket out;
    out.lower = {std::min(log_e - std::log(static_cast<double>(q.n)), 0.0), ProbKind::lower_bound};
    if (q.ensemble == Beta::complex && q.statistic == Statistic::radius) {
        out.upper = kostlan_radius_tail(q.n, q.t).prob;
    } else {
        out.upper = {std::min(log_e, 0.0), ProbKind::upper_bound};
    }
    return out;
}

BracketCheck scaled_tail_integral(TailIntegral which, int n, double t) {
    if (n < 1) throw std::invalid_argument("scaled_tail_integral: n must be positive");
    if (!(t > 1.0) || !std::isfinite(t))
        throw std::invalid_argument("scaled_tail_integral: bracket requires t > 1");

    const double nn = static_cast<double>(n);
    auto log_f = [&](double r) -> double {
        double expo = which == TailIntegral::half_exponent
                          ? -0.5 * nn * (r * r - 2.0 * std::log(r))
                          : -nn * (r * r - 2.0 * std::log(r));
        switch (which) {
            case TailIntegral::weight_r:
                return std::log(r / (r * r - 1.0)) + expo;
            case TailIntegral::weight_1:
                return -std::log(r * r - 1.0) + expo;
            default:
                return -std::log(r) + expo;
        }
    };
    // the exponent alone decays with rate >= slope(b) past b, and the
    // algebraic prefactor is decreasing, so the truncated tail is at most
    // f(b) / slope(b)
    auto slope = [&](double r) {
        double c = which == TailIntegral::half_exponent ? nn : 2.0 * nn;
        return c * (r - 1.0 / r);
    };

    const double lf_t = log_f(t);
    double b = t;
    for (int it = 0; it < 10000; ++it) {
        double need = log_f(b) - (lf_t - 70.0);
        if (need <= 0.0) break;
        b += need / slope(b) + 1e-9;
    }

    auto q = quadrature::log_integrate(log_f, t, b, 1e-11);
    double tail_log = log_f(b) - std::log(slope(b));
    if (tail_log > q.log_value + std::log(1e-10))
        throw numerical_error("scaled_tail_integral: truncation not certifiable",
                              std::exp(tail_log - q.log_value));

    const double t2 = t * t;
    const double den = t2 - 1.0;
    BracketCheck out;
    out.log_value = q.log_value;
    double corr;
    switch (which) {
        case TailIntegral::weight_r:
            out.log_upper = 2.0 * std::log(t) - nn * (t2 - 2.0 * std::log(t)) -
                            std::log(2.0 * nn) - 2.0 * std::log(den);
            corr = (t2 + 1.0) / (nn * den * den);
            break;
        case TailIntegral::weight_1:
            out.log_upper = std::log(t) - nn * (t2 - 2.0 * std::log(t)) - std::log(2.0 * nn) -
                            2.0 * std::log(den);
            corr = (3.0 * t2 + 1.0) / (2.0 * nn * den * den);
            break;
        default:
            out.log_upper = -0.5 * nn * (t2 - 2.0 * std::log(t)) - std::log(nn) - std::log(den);
            corr = 2.0 * t2 / (nn * den * den);
            break;
    }
    out.log_lower = corr < 1.0 ? out.log_upper + std::log1p(-corr) : neg_inf;
    out.inside = out.log_value <= out.log_upper + 1e-10 &&
                 (out.log_lower == neg_inf || out.log_value >= out.log_lower - 1e-10);
    return out;
}

}  // namespace gintail::exact_tails
