#include "gintail/montecarlo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gintail/deviation.hpp"
#include "gintail/exact_tails.hpp"
#include "gintail/sampling.hpp"

namespace gintail::montecarlo {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kZ95 = 1.959963984540054;

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

void fill_ci(ProbEstimate& e) {
    const double nt = static_cast<double>(e.trials);
    const double p = e.p_hat;
    if (e.hits < 30 || e.trials - e.hits < 30) {
        // Wilson score interval
        const double z2 = kZ95 * kZ95;
        const double denom = 1.0 + z2 / nt;
        const double center = (p + z2 / (2.0 * nt)) / denom;
        const double half =
            kZ95 * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt)) / denom;
        // rounding can leave a ~1e-19 residue at the boundary counts
        e.ci_lo = e.hits == 0 ? 0.0 : std::max(0.0, center - half);
        e.ci_hi = e.hits == e.trials ? 1.0 : std::min(1.0, center + half);
    } else {
        const double half = kZ95 * std::sqrt(p * (1.0 - p) / nt);
        e.ci_lo = std::max(0.0, p - half);
        e.ci_hi = std::min(1.0, p + half);
    }
}

// Value of the queried statistic for one trial; NaN when undefined for the
// draw (no real eigenvalues / no pairs), which never counts as a hit.
double trial_statistic(const TailQuery& q, std::uint64_t master_seed, long long trial) {
    rng::SeedSpec seed{master_seed, static_cast<std::uint64_t>(trial)};
    auto spec = sampling::sample_spectrum(q.ensemble, q.n, seed);
    auto st = sampling::extremal_stats(spec);
    switch (q.statistic) {
        case Statistic::radius: return st.radius;
        case Statistic::rightmost: return st.rightmost;
        case Statistic::real_max: return st.real_max.value_or(kNan);
        default: return st.complex_max_modulus.value_or(kNan);
    }
}

}  // namespace

ProbEstimate estimate_tail(const TailQuery& q, long long trials, std::uint64_t master_seed,
                           Route route, int workers) {
    q.validate();
    if (trials < 1) throw std::invalid_argument("estimate_tail: trials must be positive");
    if (route == Route::kostlan &&
        !(q.ensemble == Beta::complex && q.statistic == Statistic::radius))
        throw std::invalid_argument("estimate_tail: kostlan route requires complex radius");

    long long hits = 0;
    const int nw = resolve_workers(workers);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : hits) num_threads(nw)
    for (long long i = 0; i < trials; ++i) {
        double v;
        if (route == Route::kostlan) {
            rng::SeedSpec seed{master_seed, static_cast<std::uint64_t>(i)};
            v = sampling::kostlan_sample_radius(q.n, seed);
        } else {
            v = trial_statistic(q, master_seed, i);
        }
        if (v >= q.t) hits += 1;
    }
    ProbEstimate e;
    e.hits = hits;
    e.trials = trials;
    e.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
    fill_ci(e);
    return e;
}

std::vector<LdpRow> ldp_curve(Beta ensemble, Statistic stat, double t,
                              const std::vector<int>& n_list, long long trials,
                              std::uint64_t master_seed, int workers) {
    if (!(t >= 1.0) || !std::isfinite(t))
        throw std::invalid_argument("ldp_curve: t must be finite and >= 1");
    const bool exact = ensemble == Beta::complex && stat == Statistic::radius;
    const double rate = deviation::rate_I(ensemble, t).rate;

    std::vector<LdpRow> rows;
    for (int n : n_list) {
        LdpRow row{n, kNan, rate, kNan, exact ? "exact" : "mc", false, true};
        double log_p;
        if (exact) {
            log_p = exact_tails::kostlan_radius_tail(n, t).prob.log_p;
        } else {
            TailQuery q{ensemble, stat, n, t};
            auto e = estimate_tail(q, trials, master_seed + static_cast<std::uint64_t>(n),
                                   Route::matrix, workers);
            if (e.hits == 0) {
                row.flagged = true;
                rows.push_back(row);
                continue;
            }
            log_p = std::log(e.p_hat);
        }
        row.minus_log_p_over_n = -log_p / n;
        row.gap = row.minus_log_p_over_n - rate;
        if (exact) {
            const double lnn = std::log(static_cast<double>(n));
            row.envelope_ok =
                row.gap >= 0.5 * lnn / n - 5.0 / n && row.gap <= 1.5 * lnn / n + 5.0 / n;
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<MdpRow> mdp_scaling(Beta ensemble, Statistic stat, double d_exponent,
                                const std::vector<double>& t_grid, const std::vector<int>& n_list,
                                long long trials, std::uint64_t master_seed, int workers) {
    if (!(d_exponent > 0.0 && d_exponent < 0.5))
        throw std::invalid_argument("mdp_scaling: d_exponent must be in (0, 1/2)");
    const bool exact = ensemble == Beta::complex && stat == Statistic::radius;
    const double beta = beta_value(ensemble);

    std::vector<MdpRow> rows;
    for (int n : n_list) {
        const double d = std::pow(static_cast<double>(n), -d_exponent);
        const double lnn = std::log(static_cast<double>(n));
        const bool regime_ok = n * d * d >= 2.0 * lnn && d <= 0.2;
        for (double t : t_grid) {
            if (!(t > 0.0)) throw std::invalid_argument("mdp_scaling: t values must be > 0");
            const double thr = 1.0 + t * d;
            MdpRow row{n, t, d, kNan, -beta * t * t, regime_ok};
            if (exact) {
                row.value = exact_tails::kostlan_radius_tail(n, thr).prob.log_p / (n * d * d);
            } else {
                TailQuery q{ensemble, stat, n, thr};
                auto e = estimate_tail(q, trials, master_seed + static_cast<std::uint64_t>(n),
                                       Route::matrix, workers);
                if (e.hits > 0) row.value = std::log(e.p_hat) / (n * d * d);
            }
            rows.push_back(row);
        }
    }
    return rows;
}

GumbelCheck gumbel_check(int n, GumbelMode mode, long long trials, std::uint64_t master_seed,
                         int workers) {
    const double g = deviation::centering(deviation::CenteringKind::radius, n).gamma;
    const double nn = static_cast<double>(n);
    const double center = 1.0 + std::sqrt(g / (4.0 * nn));
    const double spread = 1.0 / std::sqrt(4.0 * nn * g);

    GumbelCheck out;
    out.n = n;
    out.mode = mode;
    out.trials = mode == GumbelMode::mc ? trials : 0;

    std::vector<double> radii;
    if (mode == GumbelMode::mc) {
        if (trials < 1) throw std::invalid_argument("gumbel_check: mc mode needs trials");
        radii.resize(trials);
        const int nw = resolve_workers(workers);
#pragma omp parallel for schedule(dynamic, 16) num_threads(nw)
        for (long long i = 0; i < trials; ++i) {
            rng::SeedSpec seed{master_seed, static_cast<std::uint64_t>(i)};
            radii[i] = sampling::kostlan_sample_radius(n, seed);
        }
        std::sort(radii.begin(), radii.end());
    }

    out.ks_stat = 0.0;
    for (double s = -6.0; s <= 10.0 + 1e-9; s += 0.5) {
        const double thr = center + s * spread;
        double cdf;
        if (mode == GumbelMode::exact_cdf) {
            cdf = std::exp(exact_tails::kostlan_radius_log_cdf(n, thr));
        } else {
            auto it = std::upper_bound(radii.begin(), radii.end(), thr);
            cdf = static_cast<double>(it - radii.begin()) / static_cast<double>(trials);
        }
        const double limit = std::exp(-std::exp(-s));
        out.grid.push_back({s, cdf, limit});
        out.ks_stat = std::max(out.ks_stat, std::fabs(cdf - limit));
    }

    // least-squares Gumbel location/scale of the computed CDF: regress the
    // reduced variate -log(-log F) on s
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long long m = 0;
    for (const auto& p : out.grid) {
        if (p.cdf <= 1e-8 || p.cdf >= 1.0 - 1e-8) continue;
        double y = -std::log(-std::log(p.cdf));
        sx += p.s;
        sy += y;
        sxx += p.s * p.s;
        sxy += p.s * y;
        ++m;
    }
    if (m >= 2) {
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        const double intercept = (sy - slope * sx) / m;
        out.scale_fit = 1.0 / slope;
        out.location_fit = -intercept / slope;
    } else {
        out.scale_fit = kNan;
        out.location_fit = kNan;
    }
    return out;
}

SaturnCounts saturn_counts(int n, long long trials, double threshold, std::uint64_t master_seed,
                           int workers) {
    if (n < 1) throw std::invalid_argument("saturn_counts: n must be positive");
    if (trials < 1) throw std::invalid_argument("saturn_counts: trials must be positive");
    if (!(threshold > 1.0)) throw std::invalid_argument("saturn_counts: threshold must be > 1");

    SaturnCounts out;
    out.trials = trials;
    out.records.resize(trials);
    const int nw = resolve_workers(workers);
#pragma omp parallel for schedule(dynamic, 4) num_threads(nw)
    for (long long i = 0; i < trials; ++i) {
        rng::SeedSpec seed{master_seed, static_cast<std::uint64_t>(i)};
        auto spec = sampling::sample_spectrum(Beta::real, n, seed);
        auto st = sampling::extremal_stats(spec);
        out.records[i] = {i, st.real_max.value_or(kNan), st.complex_max_modulus.value_or(kNan),
                          st.rightmost};
    }
    // counting after the parallel fill keeps the tallies order-independent
    for (const auto& r : out.records) {
        const bool re = r.real_max >= threshold;            // NaN compares false
        const bool ce = r.complex_max_modulus >= threshold;
        out.real_exceed += re;
        out.complex_exceed += ce;
        out.both += re && ce;
    }
    return out;
}

}  // namespace gintail::montecarlo
