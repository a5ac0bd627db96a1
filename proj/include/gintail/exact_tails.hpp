#pragma once

#include "gintail/types.hpp"

namespace gintail::exact_tails {

// Exact spectral-radius tail of the complex ensemble from the independent
// chi-square decomposition of the moduli:
//   P(max |sigma| >= t) = 1 - prod_{k=1}^n P(k, n t^2).
// prob is the point value; log_lower / log_upper are rigorous two-sided
// bounds (union bound above, union minus pairs below).  When the total
// exceedance mass S = sum Q(k, n t^2) is below 1e-12 the point value carries
// kind upper_bound, because 1 - prod is then indistinguishable from S in
// double precision and only the bracket is rigorous.
struct KostlanTail {
    double log_lower;
    double log_upper;
    LogProb prob;
};

KostlanTail kostlan_radius_tail(int n, double t);

// log P(max |sigma| < t) = sum_k log P(k, n t^2), the product CDF.
double kostlan_radius_log_cdf(int n, double t);

// Evaluation route for the complex-ensemble radial count; the real ensemble
// always uses certified kernel quadrature.
enum class CountRoute {
    closed_form,  // parallel Q-sum over k = 1..n
    serial,       // serial recurrence reference for the same sum
    quadrature,   // radial integral of the kernel
};

// log E #{ |sigma| >= t }.  Real ensemble requires n >= 3 and counts both
// real tails plus both members of every exceeding conjugate pair.
double log_expected_count_radius(Beta beta, int n, double t,
                                 CountRoute route = CountRoute::closed_form);

// log E #{ Re sigma >= t }, t > 0.
double log_expected_count_rightmost(Beta beta, int n, double t);

// First-moment / union bracket  E/n <= P(statistic >= t) <= min(E, 1),
// with the upper endpoint replaced by the exact Kostlan value when the query
// admits it (complex radius).
struct TailBracket {
    LogProb lower;
    LogProb upper;
};

TailBracket tail_bracket(const TailQuery& q);

// The three scaled tail integrals whose two-sided integration-by-parts
// brackets drive the deviation bounds, evaluated by certified quadrature and
// compared against their brackets:
//   weight_r:      int_t^inf r/(r^2-1)   e^{-n(r^2 - 2 log r)} dr
//   weight_1:      int_t^inf 1/(r^2-1)   e^{-n(r^2 - 2 log r)} dr
//   half_exponent: int_t^inf (1/x)       e^{-(n/2)(x^2 - 2 log x)} dx
enum class TailIntegral { weight_r, weight_1, half_exponent };

struct BracketCheck {
    double log_value;  // quadrature
    double log_lower;  // -inf when the bracket's lower factor is nonpositive
    double log_upper;
    bool inside;
};

BracketCheck scaled_tail_integral(TailIntegral which, int n, double t);

}  // namespace gintail::exact_tails
