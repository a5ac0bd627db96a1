#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gintail/types.hpp"

namespace gintail::montecarlo {

struct ProbEstimate {
    long long hits = 0;
    long long trials = 0;
    double p_hat = 0.0;
    double ci_lo = 0.0;  // 95% interval; Wilson when either count is < 30,
    double ci_hi = 0.0;  // normal approximation otherwise
};

enum class Route { matrix, kostlan };

// Frequency estimate of P(statistic >= t) over independent per-trial streams
// derived from master_seed.  route=kostlan is valid only for the complex
// radius.  workers <= 0 means the OpenMP default; results are identical for
// any worker count.
ProbEstimate estimate_tail(const TailQuery& q, long long trials, std::uint64_t master_seed,
                           Route route = Route::matrix, int workers = 0);

struct LdpRow {
    int n;
    double minus_log_p_over_n;  // NaN when flagged
    double rate_target;
    double gap;
    std::string route;  // "exact" or "mc"
    bool flagged;       // zero MC hits
    bool envelope_ok;   // exact route: gap inside the [1/2, 3/2] log n / n band
};

// -(1/n) log P along n_list against the limit rate.  Exact product route for
// the complex radius, Monte Carlo otherwise (trials per n).
std::vector<LdpRow> ldp_curve(Beta ensemble, Statistic stat, double t,
                              const std::vector<int>& n_list, long long trials,
                              std::uint64_t master_seed, int workers = 0);

struct MdpRow {
    int n;
    double t;
    double d;       // d_n = n^{-d_exponent}
    double value;   // log P / (n d^2); NaN when MC saw no hits
    double target;  // -beta t^2
    bool regime_ok;
};

// Moderate-deviation scaling check at thresholds 1 + t d_n.
std::vector<MdpRow> mdp_scaling(Beta ensemble, Statistic stat, double d_exponent,
                                const std::vector<double>& t_grid, const std::vector<int>& n_list,
                                long long trials, std::uint64_t master_seed, int workers = 0);

enum class GumbelMode { exact_cdf, mc };

struct GumbelPoint {
    double s;        // Gumbel variable
    double cdf;      // exact product CDF or empirical CDF at the mapped threshold
    double limit;    // exp(-e^{-s})
};

struct GumbelCheck {
    int n;
    long long trials;  // 0 in exact_cdf mode
    GumbelMode mode;
    double ks_stat;       // sup over the grid of |cdf - limit|
    double location_fit;  // least-squares Gumbel location/scale of the
    double scale_fit;     // computed CDF in the s variable (limit: 0 and 1)
    std::vector<GumbelPoint> grid;
};

// Distribution of the centered/scaled complex-ensemble radius against the
// Gumbel limit.  exact_cdf evaluates the Kostlan product CDF (no sampling);
// mc draws radii through the chi decomposition.
GumbelCheck gumbel_check(int n, GumbelMode mode, long long trials = 0,
                         std::uint64_t master_seed = 0, int workers = 0);

struct SaturnTrial {
    long long trial;
    double real_max;             // NaN when the trial had no real eigenvalues
    double complex_max_modulus;  // NaN when no conjugate pairs
    double rightmost;
};

struct SaturnCounts {
    long long real_exceed = 0;
    long long complex_exceed = 0;
    long long both = 0;
    long long trials = 0;
    std::vector<SaturnTrial> records;
};

// Real-ensemble exceedance comparison at one threshold, with per-trial
// extremal records for plotting.
SaturnCounts saturn_counts(int n, long long trials, double threshold, std::uint64_t master_seed,
                           int workers = 0);

}  // namespace gintail::montecarlo
