#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gintail/deviation.hpp"
#include "gintail/errors.hpp"
#include "gintail/exact_tails.hpp"
#include "gintail/kernels.hpp"
#include "gintail/montecarlo.hpp"
#include "gintail/sampling.hpp"
#include "gintail/serialize.hpp"
#include "gintail/types.hpp"

using nlohmann::json;
namespace gt = gintail;

namespace {

gt::Beta parse_ensemble(const std::string& s) {
    if (s == "real") return gt::Beta::real;
    if (s == "complex") return gt::Beta::complex;
    throw std::invalid_argument("ensemble must be 'real' or 'complex'");
}

gt::Beta parse_beta(int b) {
    if (b == 1) return gt::Beta::real;
    if (b == 2) return gt::Beta::complex;
    throw std::invalid_argument("beta must be 1 or 2");
}

gt::Statistic parse_stat(const std::string& s) {
    if (s == "radius") return gt::Statistic::radius;
    if (s == "rightmost") return gt::Statistic::rightmost;
    if (s == "real_max" || s == "real") return gt::Statistic::real_max;
    if (s == "complex_max_modulus") return gt::Statistic::complex_max_modulus;
    throw std::invalid_argument("unknown statistic '" + s + "'");
}

int env_workers() {
    const char* w = std::getenv("WORKERS");
    return w ? std::atoi(w) : 0;
}

json prob_json(const gt::LogProb& p) {
    return {{"log_p", p.log_p}, {"p", p.p()}, {"kind", gt::to_string(p.kind)}};
}

std::string fd(double v) { return gt::serialize::fmt_double(v); }

void emit(const std::string& output, const std::string& config_line,
          const std::vector<std::string>& columns,
          const std::vector<std::vector<std::string>>& rows, const json& summary) {
    if (output.empty()) {
        gt::serialize::write_csv(std::cout, config_line, columns, rows);
        return;
    }
    std::ofstream os(output, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output path '" + output + "'");
    gt::serialize::write_csv(os, config_line, columns, rows);
    std::cout << summary.dump() << '\n';
}

struct Opts {
    std::string ensemble = "complex";
    std::string stat = "radius";
    std::string route = "closed_form";
    std::string mc_route = "matrix";
    std::string mode = "exact_cdf";
    std::string output;
    int n = 100;
    int beta = 2;
    double t = 1.3;
    double threshold = 1.1;
    double d_exponent = 0.25;
    long long trials = 10000;
    long long row_cap = 10000000;
    std::uint64_t seed = 0;
    int workers = env_workers();
    std::vector<int> n_list;
    std::vector<double> t_grid;
};

void run_rate(const Opts& o) {
    auto r = gt::deviation::rate_I(parse_beta(o.beta), o.t);
    json out = {{"t", o.t}, {"beta", o.beta}, {"finite", r.finite}};
    out["rate"] = r.finite ? json(r.rate) : json();
    std::cout << out.dump() << '\n';
}

void run_exact_tail(const Opts& o) {
    if (parse_ensemble(o.ensemble) != gt::Beta::complex ||
        parse_stat(o.stat) != gt::Statistic::radius)
        throw std::invalid_argument("exact-tail: closed form exists only for complex radius");
    auto kt = gt::exact_tails::kostlan_radius_tail(o.n, o.t);
    json out = {{"n", o.n},
                {"t", o.t},
                {"log_p", kt.prob.log_p},
                {"p", kt.prob.p()},
                {"kind", gt::to_string(kt.prob.kind)},
                {"log_lower", kt.log_lower},
                {"log_upper", kt.log_upper}};
    std::cout << out.dump() << '\n';
}

void run_expected_count(const Opts& o) {
    auto ens = parse_ensemble(o.ensemble);
    auto st = parse_stat(o.stat);
    std::string route = o.route;
    double log_v;
    if (st == gt::Statistic::radius) {
        gt::exact_tails::CountRoute r;
        if (ens == gt::Beta::real || route == "quadrature")
            r = gt::exact_tails::CountRoute::quadrature;
        else if (route == "closed_form")
            r = gt::exact_tails::CountRoute::closed_form;
        else if (route == "serial")
            r = gt::exact_tails::CountRoute::serial;
        else
            throw std::invalid_argument("route must be closed_form, serial, or quadrature");
        if (ens == gt::Beta::real) route = "quadrature";
        log_v = gt::exact_tails::log_expected_count_radius(ens, o.n, o.t, r);
    } else if (st == gt::Statistic::rightmost) {
        route = "quadrature";
        log_v = gt::exact_tails::log_expected_count_rightmost(ens, o.n, o.t);
    } else {
        if (ens != gt::Beta::real)
            throw std::invalid_argument("expected-count: statistic requires the real ensemble");
        if (o.n < 3)
            throw std::invalid_argument("expected-count: real ensemble requires n >= 3");
        route = "quadrature";
        log_v = st == gt::Statistic::real_max ? gt::kernels::log_real_count_right(o.n, o.t)
                                              : gt::kernels::log_pair_count_radius(o.n, o.t);
    }
    json out = {{"n", o.n},       {"t", o.t},          {"statistic", gt::to_string(st)},
                {"route", route}, {"log_value", log_v}, {"value", std::exp(log_v)}};
    std::cout << out.dump() << '\n';
}

void run_tail_bracket(const Opts& o) {
    gt::TailQuery q{parse_ensemble(o.ensemble), parse_stat(o.stat), o.n, o.t};
    auto br = gt::exact_tails::tail_bracket(q);
    json out = {{"n", o.n},
                {"t", o.t},
                {"ensemble", gt::to_string(q.ensemble)},
                {"statistic", gt::to_string(q.statistic)},
                {"lower", prob_json(br.lower)},
                {"upper", prob_json(br.upper)}};
    std::cout << out.dump() << '\n';
}

void run_mc(const Opts& o) {
    gt::TailQuery q{parse_ensemble(o.ensemble), parse_stat(o.stat), o.n, o.t};
    gt::montecarlo::Route route;
    if (o.mc_route == "matrix")
        route = gt::montecarlo::Route::matrix;
    else if (o.mc_route == "kostlan")
        route = gt::montecarlo::Route::kostlan;
    else
        throw std::invalid_argument("route must be 'matrix' or 'kostlan'");
    auto e = gt::montecarlo::estimate_tail(q, o.trials, o.seed, route, o.workers);
    json out = {{"hits", e.hits},   {"trials", e.trials}, {"p_hat", e.p_hat},
                {"ci_lo", e.ci_lo}, {"ci_hi", e.ci_hi},   {"seed", o.seed}};
    out["log_p"] = e.hits > 0 ? json(std::log(e.p_hat)) : json();
    std::cout << out.dump() << '\n';
}

void run_ldp_curve(const Opts& o) {
    if (o.n_list.empty()) throw std::invalid_argument("ldp-curve: --n-list required");
    auto rows = gt::montecarlo::ldp_curve(parse_ensemble(o.ensemble), parse_stat(o.stat), o.t,
                                          o.n_list, o.trials, o.seed, o.workers);
    std::ostringstream cfg;
    cfg << "command=ldp-curve ensemble=" << o.ensemble << " stat=" << o.stat << " t=" << fd(o.t)
        << " trials=" << o.trials << " seed=" << o.seed;
    std::vector<std::vector<std::string>> cells;
    json jrows = json::array();
    for (const auto& r : rows) {
        cells.push_back({std::to_string(r.n), fd(r.minus_log_p_over_n), fd(r.rate_target),
                         fd(r.gap), r.route});
        jrows.push_back({{"n", r.n},
                         {"minus_log_p_over_n", r.minus_log_p_over_n},
                         {"rate_target", r.rate_target},
                         {"gap", r.gap},
                         {"route", r.route},
                         {"flagged", r.flagged},
                         {"envelope_ok", r.envelope_ok}});
    }
    emit(o.output, cfg.str(), {"n", "minus_log_p_over_n", "rate_target", "gap", "route"}, cells,
         json{{"rows", jrows}});
}

void run_mdp_scaling(const Opts& o) {
    if (o.n_list.empty()) throw std::invalid_argument("mdp-scaling: --n-list required");
    if (o.t_grid.empty()) throw std::invalid_argument("mdp-scaling: --t-grid required");
    auto rows = gt::montecarlo::mdp_scaling(parse_ensemble(o.ensemble), parse_stat(o.stat),
                                            o.d_exponent, o.t_grid, o.n_list, o.trials, o.seed,
                                            o.workers);
    std::ostringstream cfg;
    cfg << "command=mdp-scaling ensemble=" << o.ensemble << " stat=" << o.stat
        << " d_exponent=" << fd(o.d_exponent) << " trials=" << o.trials << " seed=" << o.seed;
    std::vector<std::vector<std::string>> cells;
    json jrows = json::array();
    for (const auto& r : rows) {
        cells.push_back({std::to_string(r.n), fd(r.t), fd(r.d), fd(r.value), fd(r.target),
                         r.regime_ok ? "1" : "0"});
        jrows.push_back({{"n", r.n},
                         {"t", r.t},
                         {"d", r.d},
                         {"value", r.value},
                         {"target", r.target},
                         {"regime_ok", r.regime_ok}});
    }
    emit(o.output, cfg.str(), {"n", "t", "d", "value", "target", "regime_ok"}, cells,
         json{{"rows", jrows}});
}

void run_gumbel(const Opts& o) {
    gt::montecarlo::GumbelMode mode;
    if (o.mode == "exact_cdf" || o.mode == "exact")
        mode = gt::montecarlo::GumbelMode::exact_cdf;
    else if (o.mode == "mc")
        mode = gt::montecarlo::GumbelMode::mc;
    else
        throw std::invalid_argument("mode must be 'exact_cdf' or 'mc'");
    auto chk = gt::montecarlo::gumbel_check(o.n, mode, o.trials, o.seed, o.workers);
    std::ostringstream cfg;
    cfg << "command=gumbel n=" << o.n << " mode=" << o.mode << " trials=" << chk.trials
        << " seed=" << o.seed;
    std::vector<std::vector<std::string>> cells;
    for (const auto& p : chk.grid) cells.push_back({fd(p.s), fd(p.cdf), fd(p.limit)});
    json summary = {{"n", chk.n},
                    {"mode", o.mode},
                    {"trials", chk.trials},
                    {"ks_stat", chk.ks_stat},
                    {"location_fit", chk.location_fit},
                    {"scale_fit", chk.scale_fit}};
    emit(o.output, cfg.str(), {"grid_t", "empirical_or_exact_cdf", "limit_cdf"}, cells, summary);
}

void run_saturn(const Opts& o) {
    auto sc = gt::montecarlo::saturn_counts(o.n, o.trials, o.threshold, o.seed, o.workers);
    std::ostringstream cfg;
    cfg << "command=saturn n=" << o.n << " trials=" << o.trials
        << " threshold=" << fd(o.threshold) << " seed=" << o.seed;
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : sc.records)
        cells.push_back({std::to_string(r.trial), fd(r.real_max), fd(r.complex_max_modulus),
                         fd(r.rightmost)});
    json summary = {{"real_exceed", sc.real_exceed},
                    {"complex_exceed", sc.complex_exceed},
                    {"both", sc.both},
                    {"trials", sc.trials},
                    {"threshold", o.threshold}};
    emit(o.output, cfg.str(), {"trial", "real_max", "complex_max_modulus", "rightmost"}, cells,
         summary);
}

void run_sample(const Opts& o) {
    auto ens = parse_ensemble(o.ensemble);
    if (o.trials < 1) throw std::invalid_argument("sample: trials must be positive");
    if (static_cast<long long>(o.n) * o.trials > o.row_cap)
        throw std::invalid_argument("sample: trials * n exceeds the row cap");
    std::ostringstream cfg;
    cfg << "command=sample ensemble=" << o.ensemble << " n=" << o.n << " trials=" << o.trials
        << " seed=" << o.seed;
    std::vector<std::vector<std::string>> cells;
    cells.reserve(static_cast<std::size_t>(o.n) * o.trials);
    for (long long trial = 0; trial < o.trials; ++trial) {
        auto spec = gt::sampling::sample_spectrum(
            ens, o.n, {o.seed, static_cast<std::uint64_t>(trial)});
        std::string ts = std::to_string(trial);
        if (ens == gt::Beta::complex) {
            for (const auto& z : spec.points)
                cells.push_back({ts, fd(z.real()), fd(z.imag()), "0"});
        } else {
            for (double x : spec.real_eigs) cells.push_back({ts, fd(x), "0", "1"});
            for (const auto& z : spec.complex_pairs) {
                cells.push_back({ts, fd(z.real()), fd(z.imag()), "0"});
                cells.push_back({ts, fd(z.real()), fd(-z.imag()), "0"});
            }
        }
    }
    emit(o.output, cfg.str(), {"trial", "re", "im", "is_real"}, cells,
         json{{"rows", cells.size()}, {"trials", o.trials}, {"n", o.n}});
}

void add_common(CLI::App* cmd, Opts& o, bool with_stat = true) {
    cmd->add_option("--ensemble", o.ensemble, "real or complex");
    if (with_stat) cmd->add_option("--stat", o.stat, "radius, rightmost, real_max, complex_max_modulus");
    cmd->add_option("--workers", o.workers, "worker threads (default: WORKERS env or all cores)");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--output", o.output, "CSV output path (default: CSV to stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact, asymptotic, and Monte Carlo tail statistics of Ginibre eigenvalues"};
    app.require_subcommand(1);
    Opts o;

    auto* rate = app.add_subcommand("rate", "large-deviation rate function");
    rate->add_option("--beta", o.beta, "1 (real) or 2 (complex)")->required();
    rate->add_option("--t", o.t, "threshold")->required();
    rate->callback([&] { run_rate(o); });

    auto* et = app.add_subcommand("exact-tail", "exact complex-radius tail (chi decomposition)");
    add_common(et, o);
    et->add_option("--n", o.n)->required();
    et->add_option("--t", o.t)->required();
    et->callback([&] { run_exact_tail(o); });

    auto* ec = app.add_subcommand("expected-count", "expected exceedance count");
    add_common(ec, o);
    ec->add_option("--n", o.n)->required();
    ec->add_option("--t", o.t)->required();
    ec->add_option("--route", o.route, "closed_form, serial, or quadrature (complex radius)");
    ec->callback([&] { run_expected_count(o); });

    auto* tb = app.add_subcommand("tail-bracket", "first-moment / union bracket on the tail");
    add_common(tb, o);
    tb->add_option("--n", o.n)->required();
    tb->add_option("--t", o.t)->required();
    tb->callback([&] { run_tail_bracket(o); });

    auto* mc = app.add_subcommand("mc", "Monte Carlo tail estimate with 95% CI");
    add_common(mc, o);
    mc->add_option("--n", o.n)->required();
    mc->add_option("--t", o.t)->required();
    mc->add_option("--trials", o.trials)->required();
    mc->add_option("--route", o.mc_route, "matrix or kostlan");
    mc->callback([&] { run_mc(o); });

    auto* ldp = app.add_subcommand("ldp-curve", "-(1/n) log P against the rate function");
    add_common(ldp, o);
    ldp->add_option("--t", o.t)->required();
    ldp->add_option("--n-list", o.n_list)->required()->delimiter(',');
    ldp->add_option("--trials", o.trials, "MC trials per n (non-exact routes)");
    ldp->callback([&] { run_ldp_curve(o); });

    auto* mdp = app.add_subcommand("mdp-scaling", "moderate-deviation scaling table");
    add_common(mdp, o);
    mdp->add_option("--d-exponent", o.d_exponent, "d_n = n^{-exponent}, in (0, 1/2)");
    mdp->add_option("--t-grid", o.t_grid)->required()->delimiter(',');
    mdp->add_option("--n-list", o.n_list)->required()->delimiter(',');
    mdp->add_option("--trials", o.trials, "MC trials (non-exact routes)");
    mdp->callback([&] { run_mdp_scaling(o); });

    auto* gum = app.add_subcommand("gumbel", "centered/scaled radius against the Gumbel limit");
    add_common(gum, o, false);
    gum->add_option("--n", o.n)->required();
    gum->add_option("--mode", o.mode, "exact_cdf or mc");
    gum->add_option("--trials", o.trials, "draws (mc mode)");
    gum->callback([&] { run_gumbel(o); });

    auto* sat = app.add_subcommand("saturn", "real vs complex exceedances (real ensemble)");
    add_common(sat, o, false);
    sat->add_option("--n", o.n)->required();
    sat->add_option("--trials", o.trials)->required();
    sat->add_option("--threshold", o.threshold)->required();
    sat->callback([&] { run_saturn(o); });

    auto* smp = app.add_subcommand("sample", "raw eigenvalue draws as CSV");
    add_common(smp, o, false);
    smp->add_option("--n", o.n)->required();
    smp->add_option("--trials", o.trials)->required();
    smp->add_option("--row-cap", o.row_cap, "maximum emitted rows");
    smp->callback([&] { run_sample(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gintail::regime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gintail::numerical_error& e) {
        std::cerr << "error: " << e.what() << " (achieved bound " << e.achieved_bound() << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
