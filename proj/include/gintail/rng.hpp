#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace gintail::rng {

// Fixed avalanche mix (splitmix64 finalizer).  Per-trial streams are a pure
// function of (master_seed, trial_index) through this exact mixing, so runs
// reproduce across machines and worker counts.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t trial_index = 0;
};

inline std::uint64_t derive_stream_seed(const SeedSpec& s) {
    return splitmix64(splitmix64(s.master_seed) ^ (s.trial_index * 0xd1342543de82ef95ULL + 1));
}

// Deterministic stream: the engine is the standard-specified mt19937_64 and
// the variate transforms below are hand-fixed (the standard library's
// distribution objects are implementation-defined and would break
// cross-platform reproducibility).
class Rng {
public:
    explicit Rng(const SeedSpec& s) : engine_(derive_stream_seed(s)) {}
    explicit Rng(std::uint64_t raw_seed) : engine_(raw_seed) {}

    // uniform on [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller, pairs cached
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 == 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // gamma variate, unit scale, shape >= 1 (Marsaglia-Tsang squeeze)
    double gamma(double shape) {
        if (!(shape >= 1.0)) throw std::invalid_argument("Rng::gamma: shape must be >= 1");
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double f = 1.0 + c * x;
            if (f <= 0.0) continue;
            double v = f * f * f;
            double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace gintail::rng
