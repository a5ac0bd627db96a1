#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "gintail/log_space.hpp"

namespace gintail {

// Symmetry class: real (beta = 1) or complex (beta = 2) Gaussian entries.
enum class Beta { real = 1, complex = 2 };

inline double beta_value(Beta b) { return b == Beta::real ? 1.0 : 2.0; }

inline const char* to_string(Beta b) { return b == Beta::real ? "real" : "complex"; }

// Extremal statistic of one spectrum.  real_max and complex_max_modulus only
// make sense for the real ensemble, where the spectrum splits into real
// eigenvalues and conjugate pairs.
enum class Statistic { radius, rightmost, real_max, complex_max_modulus };

inline const char* to_string(Statistic s) {
    switch (s) {
        case Statistic::radius: return "radius";
        case Statistic::rightmost: return "rightmost";
        case Statistic::real_max: return "real_max";
        default: return "complex_max_modulus";
    }
}

enum class ProbKind { exact, upper_bound, lower_bound, estimate };

inline const char* to_string(ProbKind k) {
    switch (k) {
        case ProbKind::exact: return "exact";
        case ProbKind::upper_bound: return "upper_bound";
        case ProbKind::lower_bound: return "lower_bound";
        default: return "estimate";
    }
}

// A probability carried in natural-log space.
struct LogProb {
    double log_p = neg_inf;
    ProbKind kind = ProbKind::exact;

    // Raw-probability accessor, clamped to [0, 1] after exponentiation.
    double p() const {
        double v = std::exp(log_p);
        return v > 1.0 ? 1.0 : v;
    }
};

// The canonical question every computational route answers:
// P(statistic of an n x n ensemble-beta Ginibre matrix >= t).
struct TailQuery {
    Beta ensemble = Beta::complex;
    Statistic statistic = Statistic::radius;
    int n = 1;
    double t = 1.0;

    void validate() const {
        if (n < 1) throw std::invalid_argument("TailQuery: n must be positive");
        if (!(t > 0.0) || !std::isfinite(t))
            throw std::invalid_argument("TailQuery: threshold t must be finite and > 0");
        if ((statistic == Statistic::real_max || statistic == Statistic::complex_max_modulus) &&
            ensemble != Beta::real)
            throw std::invalid_argument(
                "TailQuery: real_max / complex_max_modulus require the real ensemble");
    }
};

}  // namespace gintail
