#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace swarmnaming {

/// The single seeded generator of a run. Every stochastic branch of the
/// simulation draws from one instance, in phase-then-robot-index order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Degenerate probabilities consume no draw.
  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform() < p;
  }

  /// Uniform index in [0, n); n must be positive. n == 1 consumes no draw.
  std::size_t index(std::size_t n) {
    if (n <= 1) return 0;
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  double normal(double sigma) {
    if (sigma <= 0.0) return 0.0;
    return sigma * std_normal_(engine_);
  }

  bool coin() { return bernoulli(0.5); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> std_normal_{0.0, 1.0};
};

}  // namespace swarmnaming
