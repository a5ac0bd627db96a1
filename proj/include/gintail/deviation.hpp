#pragma once

#include <string>

#include "gintail/types.hpp"

namespace gintail::deviation {

struct RateEvaluation {
    double t;
    Beta beta;
    double rate;   // nats per unit n; +inf below the bulk edge
    bool finite;
};

// Large-deviation rate function I_beta(t) = (beta/2)(t^2 - 2 log t - 1) for
// t >= 1, +inf for t < 1.
RateEvaluation rate_I(Beta beta, double t);

enum class CenteringKind { radius, rightmost };

struct CenteringSequence {
    long n;
    double gamma;
    CenteringKind kind;
};

// gamma_n = log n - 2 log log n - log(2 pi)               (radius)
// gamma'_n = (log n - 5 log log n - log(2 pi^4)) / 2      (rightmost)
// Throws regime_error when the value is nonpositive, since thresholds take
// sqrt(gamma / 4n).
CenteringSequence centering(CenteringKind kind, long n);

// Limit law exp(-(beta/2) e^{-t}) of the centered/scaled extremal statistic.
double gumbel_cdf_limit(Beta beta, double t);

// Limiting right tail e^{-t^2} / (4 sqrt(pi) t) of the largest real
// eigenvalue at threshold 1 + t / sqrt(n).
double real_tail_limit(double t);

// Moderate-deviation envelope: log of the upper bound on
// P(statistic >= 1 + d) with the O(d) correction instantiated as the exact
// exponent d^2 + 2d - 2 log(1+d) (and half of it for the real-eigenvalue
// term).  Unknown theorem constants enter as a caller-supplied log-multiplier.
struct MdpEnvelope {
    double log_bound;        // includes log_c
    double log_complex_term; // -inf when absent
    double log_real_term;    // -inf when absent (beta = 2, or not applicable)
    bool window_ok;
    std::string warning;     // empty when window_ok
};

MdpEnvelope mdp_envelope(Beta beta, Statistic stat, long n, double d, double log_c = 0.0);

// The exact proof-level exponent d^2 + 2d - 2 log(1+d) = 2 d^2 (1 - O(d)).
double mdp_exponent(double d);

}  // namespace gintail::deviation
