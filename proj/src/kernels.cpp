#include "lieqr/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace lieqr::kernels {

namespace {

void addmul_scalar(uint64_t* dst, const uint64_t* src, size_t n, uint64_t g, uint64_t p) {
  for (size_t i = 0; i < n; ++i) {
    uint64_t t = static_cast<uint64_t>((static_cast<unsigned __int128>(g) * src[i]) % p);
    uint64_t s = dst[i] + t;
    dst[i] = s >= p ? s - p : s;
  }
}

void scale_scalar(uint64_t* dst, size_t n, uint64_t g, uint64_t p) {
  for (size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<uint64_t>((static_cast<unsigned __int128>(g) * dst[i]) % p);
  }
}

}  // namespace

static const Dispatch scalar_dispatch{addmul_scalar, scale_scalar, "scalar"};

#if defined(LIEQR_BUILD_AVX2)
namespace detail {
extern const Dispatch avx2_dispatch;
bool avx2_supported();
}  // namespace detail
#endif

std::vector<const Dispatch*> available() {
  std::vector<const Dispatch*> out{&scalar_dispatch};
#if defined(LIEQR_BUILD_AVX2)
  if (detail::avx2_supported()) out.push_back(&detail::avx2_dispatch);
#endif
  return out;
}

const Dispatch& active() {
  static const Dispatch* chosen = [] {
    const Dispatch* best = &scalar_dispatch;
#if defined(LIEQR_BUILD_AVX2)
    if (detail::avx2_supported()) best = &detail::avx2_dispatch;
#endif
    if (const char* env = std::getenv("LIEQR_KERNEL")) {
      for (const Dispatch* d : available()) {
        if (std::strcmp(env, d->name) == 0) return d;
      }
      // Unknown or unsupported name: fall through to the auto pick.
    }
    return best;
  }();
  return *chosen;
}

}  // namespace lieqr::kernels
