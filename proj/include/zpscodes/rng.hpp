#pragma once

#include <cstdint>

namespace zps {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed algorithm so that corpora and
/// search results reproduce bit-for-bit on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  /// Independent stream for (seed, index): the state is the mixed seed xor'd
  /// with the mixed index, so neighbouring indices do not share prefixes.
  static SplitMix64 keyed(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(mix(seed) ^ mix(index ^ 0x6a09e667f3bcc909ULL));
  }

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace zps
