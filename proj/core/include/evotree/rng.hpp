#pragma once

#include <cstdint>
#include <random>

namespace evotree {

/// Deterministic random source. std::mt19937_64 produces an identical
/// sequence on every conforming implementation; the draw helpers below
/// avoid std::*_distribution, whose outputs differ across standard
/// libraries. Equal seeds therefore reproduce runs on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform over [0, n). n must be positive. Rejection sampling removes
  /// the modulo bias.
  std::size_t index(std::size_t n) {
    const std::uint64_t kMax = ~std::uint64_t{0};
    const std::uint64_t limit = kMax - kMax % n;
    std::uint64_t v = gen_();
    while (v >= limit) v = gen_();
    return static_cast<std::size_t>(v % n);
  }

  /// Uniform integer in [lo, hi], both ends inclusive.
  std::int32_t range(std::int32_t lo, std::int32_t hi) {
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int32_t>(lo + static_cast<std::int64_t>(index(static_cast<std::size_t>(span))));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double real01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return real01() < p; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace evotree
