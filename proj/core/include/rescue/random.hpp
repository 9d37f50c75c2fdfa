#pragma once

#include <cstdint>
#include <random>

namespace rescue {

/// Seeded 64-bit Mersenne Twister producing uniforms from the top 53 bits.
/// Output depends only on the seed, not on the standard library in use.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0,1).
  double uniform01() noexcept {
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    return (static_cast<double>(engine_() >> 11) + 0.5) * kScale;
  }

  /// Uniform on (low, high) for low < high.
  double uniform(double low, double high) noexcept { return low + (high - low) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rescue
