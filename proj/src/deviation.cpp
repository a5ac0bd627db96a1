#include "gintail/deviation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gintail/errors.hpp"
#include "gintail/log_space.hpp"

namespace gintail::deviation {

namespace {
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

RateEvaluation rate_I(Beta beta, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("rate_I: t must be finite");
    if (t <= 0.0) throw std::invalid_argument("rate_I: t must be > 0");
    if (t < 1.0) return {t, beta, kInf, false};
    double rate = 0.5 * beta_value(beta) * (t * t - 2.0 * std::log(t) - 1.0);
    if (rate < 0.0) rate = 0.0;  // guard rounding at t = 1
    return {t, beta, rate, true};
}

CenteringSequence centering(CenteringKind kind, long n) {
    if (n < 3) throw std::invalid_argument("centering: n must be >= 3");
    const double ln = std::log(static_cast<double>(n));
    const double lln = std::log(ln);
    double gamma;
    if (kind == CenteringKind::radius) {
        gamma = ln - 2.0 * lln - kLog2Pi;
    } else {
        // log(2 pi^4) = log 2 + 4 log pi
        gamma = 0.5 * (ln - 5.0 * lln - (std::log(2.0) + 4.0 * std::log(M_PI)));
    }
    if (gamma <= 0.0)
        throw regime_error("centering undefined at this n (nonpositive value)");
    return {n, gamma, kind};
}

double gumbel_cdf_limit(Beta beta, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("gumbel_cdf_limit: t must be finite");
    return std::exp(-0.5 * beta_value(beta) * std::exp(-t));
}

double real_tail_limit(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("real_tail_limit: t must be finite and > 0");
    return std::exp(-t * t) / (4.0 * std::sqrt(M_PI) * t);
}

double mdp_exponent(double d) {
    return d * d + 2.0 * d - 2.0 * std::log1p(d);
}

MdpEnvelope mdp_envelope(Beta beta, Statistic stat, long n, double d, double log_c) {
    if (!(d > 0.0 && d < 1.0)) throw std::invalid_argument("mdp_envelope: d must be in (0,1)");
    if (n < 1) throw std::invalid_argument("mdp_envelope: n must be positive");
    if (stat == Statistic::real_max && beta != Beta::real)
        throw std::invalid_argument("mdp_envelope: real_max requires the real ensemble");
    if (stat == Statistic::complex_max_modulus)
        throw std::invalid_argument("mdp_envelope: no envelope for complex_max_modulus");

    const double nn = static_cast<double>(n);
    const double ld = std::log(d);
    const double lnn = std::log(nn);
    const double exp_c = nn * mdp_exponent(d);        // complex-route exponent
    const double exp_r = 0.5 * nn * mdp_exponent(d);  // real-eigenvalue exponent

    double complex_term = neg_inf;
    double real_term = neg_inf;
    switch (stat) {
        case Statistic::radius:
            complex_term = -0.5 * lnn - 2.0 * ld - exp_c;
            break;
        case Statistic::rightmost:
            complex_term = -lnn - 2.5 * ld - exp_c;
            break;
        case Statistic::real_max:
            break;
        default:
            break;
    }
    if (beta == Beta::real && stat != Statistic::real_max)
        real_term = -0.5 * lnn - ld - exp_r;
    if (stat == Statistic::real_max) real_term = -0.5 * lnn - ld - exp_r;

    MdpEnvelope out;
    out.log_complex_term = complex_term;
    out.log_real_term = real_term;
    out.log_bound = log_c + log_add_exp(complex_term, real_term);

    out.window_ok = true;
    if (d > 0.2) {
        out.window_ok = false;
        out.warning = "d exceeds the moderate-deviation window (d <= 0.2)";
    } else if (stat == Statistic::radius) {
        // lower window edge sqrt(gamma_n / 4n) when gamma_n is positive
        try {
            double g = centering(CenteringKind::radius, n).gamma;
            if (d < std::sqrt(g / (4.0 * nn))) {
                out.window_ok = false;
                out.warning = "d below sqrt(gamma_n / 4n); Gumbel regime, not moderate deviations";
            }
        } catch (const regime_error&) {
            // centering not yet positive at this n; no lower window check
        } catch (const std::invalid_argument&) {
        }
    } else if (stat == Statistic::real_max) {
        if (d * std::sqrt(nn) < 1.0) {
            out.window_ok = false;
            out.warning = "d below n^{-1/2}; typical-fluctuation regime";
        }
    }
    return out;
}

}  // namespace gintail::deviation
