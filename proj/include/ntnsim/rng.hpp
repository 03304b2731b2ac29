#pragma once

#include <cstdint>
#include <cmath>

namespace ntnsim {

/// Deterministic random source with counter-based stream selection.
///
/// A stream is identified by (seed, streamIndex). The starting state is a
/// hash of both values, so streams for different indices are statistically
/// independent and can be created in any order -- the mission loop derives
/// one stream per time sample and gets the same draws regardless of how the
/// samples are scheduled.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t streamIndex = 0)
      : state_(scramble(seed) ^ scramble(~streamIndex * 0x9E3779B97F4A7C15ull)) {}

  /// Next raw 64-bit value (splitmix64 step).
  std::uint64_t nextU64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(nextU64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal draw (Box-Muller; consumes two uniforms per pair).
  double gaussian() {
    if (hasSpare_) {
      hasSpare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform01()));
    const double angle = 2.0 * 3.14159265358979323846 * uniform01();
    spare_ = radius * std::sin(angle);
    hasSpare_ = true;
    return radius * std::cos(angle);
  }

  /// Bernoulli draw with success probability p.
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  static std::uint64_t scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool hasSpare_ = false;
};

}  // namespace ntnsim
