#pragma once

#include <cstdint>

namespace bellcc::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// SplitMix64 finalizer (Steele/Lea/Flood mixing constants).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seedable, splittable SplitMix64 generator. Per-sample sub-streams are
/// derived by counter (see stream()), so sampling results do not depend on
/// how the sample range is sharded across workers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Counter-derived sub-stream: deterministic in (seed, index) alone.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed + kGolden) ^ mix64(index * kGolden + 1));
  }

  std::uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Unbiased uniform integer in [0, n) (Lemire's method).
  std::uint64_t next_below(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next()) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace bellcc::rng
