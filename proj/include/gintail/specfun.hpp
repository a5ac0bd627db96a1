#pragma once

#include <cstdint>
#include <vector>

#include "gintail/log_space.hpp"

namespace gintail::specfun {

// --- regularized incomplete gamma -------------------------------------------

// log P(k,x) and log Q(k,x), P + Q = 1, computed so the smaller of the pair is
// obtained directly (series for P when x < k+1, continued fraction for Q
// otherwise) and the other by complementation in log space.
struct GammaPQLog {
    double log_p;
    double log_q;
};

GammaPQLog gamma_pq_log(double k, double x);

// Upper regularized incomplete gamma Q(k,x) = Gamma(k,x)/Gamma(k).
double reg_gamma_q(double k, double x);
// Lower regularized incomplete gamma, computed without cancellation.
double reg_gamma_p(double k, double x);

// log Q(k, x) for k = 1..n.  The parallel version evaluates every k
// independently (OpenMP); the serial version is the reference implementation
// via the ascending recurrence Q(k+1,x) = Q(k,x) + x^k e^{-x} / k!.
std::vector<double> batch_log_q(int n, double x);
std::vector<double> batch_log_q_serial(int n, double x);

// Same for log P(k, x), k = 1..n (used for the product CDF of the radius law).
std::vector<double> batch_log_p(int n, double x);

// --- truncated exponential sum ----------------------------------------------

// log of the degree-n truncated exponential sum_{k=0}^{n} z^k / k!.
LogValue trunc_exp_log(std::int64_t n, double z);

// --- erfc -------------------------------------------------------------------

double erfc(double x);
// Scaled complement e^{x^2} erfc(x), x >= 0, no overflow up to x ~ 1e8.
double erfcx(double x);

// --- uniform asymptotics ----------------------------------------------------

// mu(t) = |t - 1 - log t|^{1/2}, the decay scale of e^{-nt} e_n(nt) away from
// the bulk edge t = 1.
double mu(double t);

struct AsymptoticRegime {
    double t;
    std::int64_t n;
    double mu;
};

AsymptoticRegime asymptotic_regime(std::int64_t n, double t);

// Asymptotic approximation to e^{-nt} e_n(nt):
//   1_{t<1} + (1/sqrt 2) mu(t) t / (t-1) * erfc(sqrt(n) mu(t)).
// Refuses |t - 1| < guard * n^{-1/2} (exact summation is the right tool
// there); returns the log of the approximated value.
LogValue trunc_exp_asymptotic(std::int64_t n, double t, double guard = 10.0);

}  // namespace gintail::specfun
