#include "lieqr/rng.hpp"

#include <stdexcept>

namespace lieqr {

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // Largest multiple of bound that fits in 64 bits; reject above it.
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    uint64_t v = next();
    if (v < limit) return v % bound;
  }
}

int64_t Rng::range(int64_t lo, int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::range: empty range");
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int64_t>(below(span));
}

uint64_t Rng::mix(uint64_t seed, uint64_t salt) {
  Rng r(seed ^ (salt * 0xd1b54a32d192ed03ull + 0x8cb92ba72f3d8dd7ull));
  return r.next();
}

}  // namespace lieqr
