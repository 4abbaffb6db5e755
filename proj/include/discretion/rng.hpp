#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace discretion {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Seeded random stream. Substreams derived from (seed, index) are part of
// the reproducibility contract: same seed and same substream layout give
// bit-identical output on every platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(mix(seed)) {}

  static RngStream substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed;
    std::uint64_t a = splitmix64(state);
    state = a ^ (0xD1B54A32D192ED03ull * (index + 1));
    return RngStream(splitmix64(state));
  }

  std::uint64_t raw() { return gen_(); }

  // Open interval (0,1); never returns an exact endpoint.
  double uniform() {
    return (static_cast<double>(raw() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Box-Muller, fixed consumption of two uniforms per variate.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static std::uint64_t mix(std::uint64_t seed) {
    std::uint64_t state = seed;
    return splitmix64(state);
  }

  std::mt19937_64 gen_;
};

}  // namespace discretion
