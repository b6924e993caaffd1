#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace batchbandit {

// Named substreams. Every consumer of randomness gets its own stream derived
// from (base_seed, trial, purpose), so agents with different batch grids see
// identical covariates and noise when run under the same seed.
enum class StreamPurpose : std::uint64_t {
    env_params = 1,   // true parameters of a synthetic environment
    covariates = 2,   // per-step covariate draws
    noise = 3,        // per-step reward noise
    forced = 4,       // forced-sampling coin + forced action choice
    shuffle = 5,      // dataset row order for data-backed environments
    aux = 6,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t trial, StreamPurpose purpose) {
    std::uint64_t s = splitmix64(base);
    s = splitmix64(s ^ (0x517cc1b727220a95ULL + trial));
    s = splitmix64(s ^ static_cast<std::uint64_t>(purpose));
    return s;
}

// Counting wrapper over mt19937_64. All distribution transforms are done by
// hand (never std::*_distribution) so that the value stream is identical on
// every platform and the per-call consumption is a fixed, testable contract:
//   uniform01      -> 1 draw
//   uniform_below  -> 1 draw
//   normal         -> 2 draws (Box-Muller, no caching)
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t base, std::uint64_t trial, StreamPurpose purpose)
        : engine_(mix_seed(base, trial, purpose)) {}

    std::uint64_t next_u64() {
        ++draws_;
        return engine_();
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in {0, ..., n-1}; n >= 1.
    std::size_t uniform_below(std::size_t n) {
        const auto k = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
        return k < n ? k : n - 1;
    }

    // Standard normal via Box-Muller. Consumes exactly two draws; the second
    // Box-Muller value is discarded to keep the consumption contract fixed.
    double normal() {
        double u1 = uniform01();
        const double u2 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    std::uint64_t draws() const { return draws_; }

  private:
    std::mt19937_64 engine_;
    std::uint64_t draws_ = 0;
};

}  // namespace batchbandit
