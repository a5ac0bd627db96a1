#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gintail/rng.hpp"
#include "gintail/types.hpp"

namespace gintail::sampling {

// Eigenvalues of one draw.  For the real ensemble the spectrum splits into
// real eigenvalues and conjugate pairs (one representative with im > 0 per
// pair, taken from the real Schur block structure); for the complex ensemble
// all n eigenvalues live in `points` and the partition fields stay empty.
struct Spectrum {
    int n = 0;
    Beta ensemble = Beta::complex;
    std::vector<double> real_eigs;
    std::vector<std::complex<double>> complex_pairs;  // im > 0, real ensemble only
    std::vector<std::complex<double>> points;         // complex ensemble only
};

// n x n row-major draws with entry variance 1/n (complex: each part 1/(2n)).
std::vector<double> sample_ginibre_real(int n, const rng::SeedSpec& seed);
std::vector<std::complex<double>> sample_ginibre_complex(int n, const rng::SeedSpec& seed);

// Dense nonsymmetric eigensolve.  The real route classifies eigenvalues by
// the Schur block structure (imaginary part exactly zero for 1x1 blocks);
// failures are retried once with explicit balancing before raising
// numerical_error.
Spectrum eigenvalues_real(std::vector<double> a, int n);
Spectrum eigenvalues_complex(std::vector<std::complex<double>> a, int n);

// One matrix draw plus eigensolve.
Spectrum sample_spectrum(Beta ensemble, int n, const rng::SeedSpec& seed);

// O(n) draw of the complex-ensemble spectral radius: max_k sqrt(G_k / n)
// with G_k gamma(k)-distributed, from the chi-square decomposition of the
// moduli.
double kostlan_sample_radius(int n, const rng::SeedSpec& seed);

struct ExtremalStats {
    double radius;
    double rightmost;
    std::optional<double> real_max;             // real ensemble, absent if no real eigs
    std::optional<double> complex_max_modulus;  // real ensemble, absent if no pairs
};

ExtremalStats extremal_stats(const Spectrum& s);

}  // namespace gintail::sampling
