#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace aerprov {

/// Seeded random source for everything stochastic in a run.
///
/// mt19937_64 output is pinned bit-for-bit by the standard, but the std
/// distributions are not, so gaussian draws go through an explicit
/// Box-Muller transform to keep traces byte-identical across toolchains.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double gaussian(double sigma) {
    if (has_cached_) {
      has_cached_ = false;
      return cached_ * sigma;
    }
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle) * sigma;
  }

  double half_normal(double sigma) { return std::abs(gaussian(sigma)); }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace aerprov
