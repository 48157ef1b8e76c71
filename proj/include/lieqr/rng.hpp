#pragma once

#include <cstdint>

namespace lieqr {

/// Deterministic 64-bit generator (splitmix64). All randomness in the
/// project flows through this so that runs reproduce bit-identically
/// across platforms, compilers and thread counts.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0. Rejection sampling, exact.
  uint64_t below(uint64_t bound);

  /// Uniform integer in [lo, hi], inclusive.
  int64_t range(int64_t lo, int64_t hi);

  /// Derive an independent stream: mix(seed, salt) differs from
  /// mix(seed, salt') and from seed itself for salt != salt'.
  static uint64_t mix(uint64_t seed, uint64_t salt);

private:
  uint64_t state_;
};

}  // namespace lieqr
