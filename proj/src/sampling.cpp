#include "gintail/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gintail/errors.hpp"

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace gintail::sampling {

namespace {

void check_n(int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
}

Spectrum classify_real(int n, const std::vector<double>& wr, const std::vector<double>& wi) {
    Spectrum s;
    s.n = n;
    s.ensemble = Beta::real;
    for (int i = 0; i < n; ++i) {
        // dgeev reports 1x1 Schur blocks with an exactly zero imaginary part
        if (wi[i] == 0.0)
            s.real_eigs.push_back(wr[i]);
        else if (wi[i] > 0.0)
            s.complex_pairs.emplace_back(wr[i], wi[i]);
    }
    return s;
}

}  // namespace

std::vector<double> sample_ginibre_real(int n, const rng::SeedSpec& seed) {
    check_n(n, "sample_ginibre_real");
    rng::Rng r(seed);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (double& x : a) x = scale * r.normal();
    return a;
}

std::vector<std::complex<double>> sample_ginibre_complex(int n, const rng::SeedSpec& seed) {
    check_n(n, "sample_ginibre_complex");
    rng::Rng r(seed);
    const double scale = 1.0 / std::sqrt(2.0 * n);
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n);
    for (auto& x : a) {
        double re = scale * r.normal();
        double im = scale * r.normal();
        x = {re, im};
    }
    return a;
}

Spectrum eigenvalues_real(std::vector<double> a, int n) {
    check_n(n, "eigenvalues_real");
    if (a.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("eigenvalues_real: matrix size mismatch");
    std::vector<double> work = a;
    std::vector<double> wr(n), wi(n);
    // row-major LAPACKE insists on ldvl/ldvr >= n even when no vectors are
    // requested
    lapack_int info = LAPACKE_dgeev(LAPACK_ROW_MAJOR, 'N', 'N', n, work.data(), n, wr.data(),
                                    wi.data(), nullptr, n, nullptr, n);
    if (info != 0) {
        // one retry with explicit balancing before giving up
        work = a;
        lapack_int ilo, ihi;
        std::vector<double> scale(n);
        double abnrm;
        info = LAPACKE_dgeevx(LAPACK_ROW_MAJOR, 'B', 'N', 'N', 'N', n, work.data(), n, wr.data(),
                              wi.data(), nullptr, n, nullptr, n, &ilo, &ihi, scale.data(), &abnrm,
                              nullptr, nullptr);
        if (info != 0) throw numerical_error("eigenvalues_real: dgeev did not converge");
    }
    return classify_real(n, wr, wi);
}

Spectrum eigenvalues_complex(std::vector<std::complex<double>> a, int n) {
    check_n(n, "eigenvalues_complex");
    if (a.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("eigenvalues_complex: matrix size mismatch");
    std::vector<std::complex<double>> w(n);
    lapack_int info = LAPACKE_zgeev(LAPACK_ROW_MAJOR, 'N', 'N', n, a.data(), n, w.data(), nullptr,
                                    n, nullptr, n);
    if (info != 0) throw numerical_error("eigenvalues_complex: zgeev did not converge");
    Spectrum s;
    s.n = n;
    s.ensemble = Beta::complex;
    s.points = std::move(w);
    return s;
}

Spectrum sample_spectrum(Beta ensemble, int n, const rng::SeedSpec& seed) {
    if (ensemble == Beta::real) return eigenvalues_real(sample_ginibre_real(n, seed), n);
    return eigenvalues_complex(sample_ginibre_complex(n, seed), n);
}

double kostlan_sample_radius(int n, const rng::SeedSpec& seed) {
    check_n(n, "kostlan_sample_radius");
    rng::Rng r(seed);
    double best = 0.0;
    for (int k = 1; k <= n; ++k) best = std::max(best, r.gamma(static_cast<double>(k)));
    return std::sqrt(best / static_cast<double>(n));
}

ExtremalStats extremal_stats(const Spectrum& s) {
    ExtremalStats out{0.0, -std::numeric_limits<double>::infinity(), {}, {}};
    if (s.ensemble == Beta::complex) {
        if (s.points.empty()) throw std::invalid_argument("extremal_stats: empty spectrum");
        for (const auto& z : s.points) {
            out.radius = std::max(out.radius, std::abs(z));
            out.rightmost = std::max(out.rightmost, z.real());
        }
        return out;
    }
    if (s.real_eigs.empty() && s.complex_pairs.empty())
        throw std::invalid_argument("extremal_stats: empty spectrum");
    for (double x : s.real_eigs) {
        out.radius = std::max(out.radius, std::fabs(x));
        out.rightmost = std::max(out.rightmost, x);
        out.real_max = std::max(out.real_max.value_or(x), x);
    }
    for (const auto& z : s.complex_pairs) {
        double m = std::abs(z);
        out.radius = std::max(out.radius, m);
        out.rightmost = std::max(out.rightmost, z.real());
        out.complex_max_modulus = std::max(out.complex_max_modulus.value_or(m), m);
    }
    return out;
}

}  // namespace gintail::sampling
