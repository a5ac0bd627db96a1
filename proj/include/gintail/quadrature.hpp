#pragma once

#include <cstddef>
#include <functional>

namespace gintail::quadrature {

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;   // accumulated panel error estimate
    std::size_t evals = 0;
};

// Adaptive Gauss-Legendre on [a, b]: 15-point panels, bisected until the
// panel-vs-halves discrepancy meets the tolerance.  Suitable for smooth
// integrands; the error field is an estimate, callers needing a certificate
// combine it with an analytic tail/derivative bound.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 0.0, int max_depth = 48);

struct LogQuadResult {
    double log_value;   // log of the (positive) integral
    double rel_err;
    std::size_t evals;
};

// Integral of exp(log_f(x)) over [a, b], scaled internally so that integrands
// spanning thousands of nats neither overflow nor underflow.  log_f may
// return -inf where the integrand vanishes.
LogQuadResult log_integrate(const std::function<double(double)>& log_f, double a, double b,
                            double rel_tol = 1e-10);

}  // namespace gintail::quadrature
