#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace dtwmerge {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Deterministic random source. mt19937_64 seeded from a single 64-bit
// value is fully specified by the standard, and the distributions below
// are implemented explicitly (std::*_distribution algorithms are
// implementation-defined, which would break reproducibility of outputs).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream keyed by (seed, stream, substream). Used to make
  // per-item randomness a function of the master seed and item indices
  // rather than of processing order.
  static Rng derive(std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t substream = 0) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ splitmix64(stream + 0x9E3779B97F4A7C15ULL));
    h = splitmix64(h ^ splitmix64(substream + 0xD1B54A32D192ED03ULL));
    return Rng(h);
  }

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, n); n must be >= 1. Rejection sampling.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t min = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= min) return r % n;
    }
  }

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Gaussian via Box-Muller; consumes exactly two engine draws per call.
  double gaussian(double mean, double stddev) {
    const double u1 =
        (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    return mean + stddev * (radius * std::cos(theta));
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace dtwmerge
