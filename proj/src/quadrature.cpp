#include "gintail/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "gintail/errors.hpp"
#include "gintail/log_space.hpp"

namespace gintail::quadrature {

namespace {

constexpr int kOrder = 15;

struct GaussRule {
    std::array<double, kOrder> node;
    std::array<double, kOrder> weight;
};

// Nodes of the Legendre polynomial by Newton iteration; avoids hardcoded
// tables and gives full double precision.
GaussRule make_rule() {
    GaussRule r{};
    const int n = kOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        r.node[i] = -x;
        r.node[n - 1 - i] = x;
        r.weight[i] = r.weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

const GaussRule& rule() {
    static const GaussRule r = make_rule();
    return r;
}

double panel(const std::function<double(double)>& f, double a, double b, std::size_t& evals) {
    const auto& r = rule();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < kOrder; ++i) s += r.weight[i] * f(mid + half * r.node[i]);
    evals += kOrder;
    return s * half;
}

struct Segment {
    double a, b, whole;
    int depth;
};

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                     double abs_tol, int max_depth) {
    QuadResult out;
    if (a == b) return out;

    std::vector<Segment> stack;
    double whole = panel(f, a, b, out.evals);
    stack.push_back({a, b, whole, 0});
    double total = whole;  // running estimate for the relative test

    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        double mid = 0.5 * (s.a + s.b);
        double left = panel(f, s.a, mid, out.evals);
        double right = panel(f, mid, s.b, out.evals);
        double refined = left + right;
        double err = std::fabs(refined - s.whole);
        total += refined - s.whole;
        double tol = std::max(abs_tol, rel_tol * std::fabs(total));
        // distribute the tolerance by panel share of the working estimate
        if (err <= tol * 0.1 * std::max(1e-3, std::fabs(refined) / (std::fabs(total) + 1e-300)) ||
            err <= abs_tol || s.depth >= max_depth) {
            out.value += refined;
            out.abs_err += err;
            continue;
        }
        stack.push_back({s.a, mid, left, s.depth + 1});
        stack.push_back({mid, s.b, right, s.depth + 1});
    }
    return out;
}

LogQuadResult log_integrate(const std::function<double(double)>& log_f, double a, double b,
                            double rel_tol) {
    // probe for the scale
    double hi = neg_inf;
    const int probes = 65;
    for (int i = 0; i <= probes; ++i) {
        double x = a + (b - a) * i / probes;
        double v = log_f(x);
        if (v > hi) hi = v;
    }
    if (hi == neg_inf) return {neg_inf, 0.0, static_cast<std::size_t>(probes + 1)};

    auto scaled = [&](double x) {
        double v = log_f(x);
        return v == neg_inf ? 0.0 : std::exp(v - hi);
    };
    QuadResult q = integrate(scaled, a, b, rel_tol, 0.0);
    if (!(q.value > 0.0))
        throw numerical_error("log_integrate: integral evaluated to a nonpositive value");
    return {hi + std::log(q.value), q.abs_err / q.value, q.evals + probes + 1};
}

}  // namespace gintail::quadrature
