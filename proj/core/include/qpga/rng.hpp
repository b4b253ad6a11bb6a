// Seeded randomness. Every stochastic routine in the library draws from an
// explicitly passed stream; there is no global generator.
#pragma once

#include <cstdint>
#include <random>

#include "qpga/types.hpp"

namespace qpga {

struct RngSeed {
    std::uint64_t seed = 0;
};

// splitmix64 step, used to derive independent child seeds (restarts, sweep
// depths) from one root seed without overlapping streams.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// mt19937_64 wrapper with hand-rolled uniform doubles so that streams are
// reproducible independent of the standard library's distribution internals.
class Rng {
  public:
    explicit Rng(RngSeed s) : engine_(s.seed) {}
    explicit Rng(std::uint64_t s) : engine_(s) {}

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform angle in [0, 2*pi)
    double angle() { return uniform() * 2.0 * kPi; }

    bool bernoulli(double p) { return uniform() < p; }

    // standard normal via Box-Muller (used for Haar-random unitaries)
    double gaussian() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace qpga
