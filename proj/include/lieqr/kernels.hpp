#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lieqr::kernels {

/// Row kernels for elimination mod a prime p in [2^60, 2^62). Inputs are
/// canonical residues in [0, p); outputs are canonical too, so every
/// variant must produce bit-identical results.
///
/// addmul:  dst[i] = (dst[i] + g*src[i]) mod p
/// scale:   dst[i] = (g*dst[i]) mod p
struct Dispatch {
  void (*addmul)(uint64_t* dst, const uint64_t* src, size_t n, uint64_t g, uint64_t p);
  void (*scale)(uint64_t* dst, size_t n, uint64_t g, uint64_t p);
  const char* name;
};

/// Active kernel set. Picks the widest supported variant at first use;
/// the LIEQR_KERNEL environment variable ("scalar", "avx2") overrides.
const Dispatch& active();

/// All variants usable on this machine (scalar first). For equivalence tests.
std::vector<const Dispatch*> available();

}  // namespace lieqr::kernels
