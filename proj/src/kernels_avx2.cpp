#include <immintrin.h>

#include "lieqr/kernels.hpp"

// AVX2 variants of the mod-p row kernels. Multiplication uses Shoup's
// preconditioned trick: with w = floor(g*2^64/p) and q = floor(w*x/2^64),
// g*x - q*p lies in [0, 2p), so one conditional subtraction lands in [0, p).
// All 64x64-bit products are assembled from 32-bit limb multiplies since
// AVX2 has no 64-bit vector multiply. Valid for p < 2^62, g < p, x < p.

namespace lieqr::kernels::detail {

namespace {

inline __m256i mulhi64(__m256i a_lo, __m256i a_hi, __m256i x) {
  const __m256i mask32 = _mm256_set1_epi64x(0xffffffffll);
  __m256i x_hi = _mm256_srli_epi64(x, 32);
  __m256i t = _mm256_mul_epu32(a_lo, x);                            // a0*x0
  __m256i u = _mm256_add_epi64(_mm256_mul_epu32(a_hi, x),           // a1*x0
                               _mm256_srli_epi64(t, 32));
  __m256i v = _mm256_add_epi64(_mm256_mul_epu32(a_lo, x_hi),        // a0*x1
                               _mm256_and_si256(u, mask32));
  __m256i hi = _mm256_add_epi64(_mm256_mul_epu32(a_hi, x_hi),       // a1*x1
                                _mm256_add_epi64(_mm256_srli_epi64(u, 32), _mm256_srli_epi64(v, 32)));
  return hi;
}

inline __m256i mullo64(__m256i a_lo, __m256i a_hi, __m256i x) {
  __m256i lo = _mm256_mul_epu32(a_lo, x);                           // a0*x0
  __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a_lo, _mm256_srli_epi64(x, 32)),
                                   _mm256_mul_epu32(a_hi, x));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i mullo64_vv(__m256i a, __m256i b) {
  __m256i lo = _mm256_mul_epu32(a, b);
  __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a, _mm256_srli_epi64(b, 32)),
                                   _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i condsub(__m256i v, __m256i p, __m256i pm1) {
  __m256i over = _mm256_cmpgt_epi64(v, pm1);  // signed is fine: values < 2^63
  return _mm256_sub_epi64(v, _mm256_and_si256(over, p));
}

struct ShoupCtx {
  __m256i g_lo, g_hi, w_lo, w_hi, vp, vpm1;
  uint64_t g, w, p;
};

inline ShoupCtx make_ctx(uint64_t g, uint64_t p) {
  ShoupCtx c;
  c.g = g;
  c.p = p;
  c.w = static_cast<uint64_t>((static_cast<unsigned __int128>(g) << 64) / p);
  c.g_lo = _mm256_set1_epi64x(static_cast<long long>(g & 0xffffffffull));
  c.g_hi = _mm256_set1_epi64x(static_cast<long long>(g >> 32));
  c.w_lo = _mm256_set1_epi64x(static_cast<long long>(c.w & 0xffffffffull));
  c.w_hi = _mm256_set1_epi64x(static_cast<long long>(c.w >> 32));
  c.vp = _mm256_set1_epi64x(static_cast<long long>(p));
  c.vpm1 = _mm256_set1_epi64x(static_cast<long long>(p - 1));
  return c;
}

// g*x mod p for four lanes.
inline __m256i mulmod4(const ShoupCtx& c, __m256i x) {
  __m256i q = mulhi64(c.w_lo, c.w_hi, x);
  __m256i gx = mullo64(c.g_lo, c.g_hi, x);
  __m256i qp = mullo64_vv(q, c.vp);
  __m256i r = _mm256_sub_epi64(gx, qp);
  return condsub(r, c.vp, c.vpm1);
}

inline uint64_t mulmod_scalar(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

void addmul_avx2(uint64_t* dst, const uint64_t* src, size_t n, uint64_t g, uint64_t p) {
  ShoupCtx c = make_ctx(g, p);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    __m256i t = mulmod4(c, x);
    __m256i s = _mm256_add_epi64(d, t);
    s = condsub(s, c.vp, c.vpm1);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
  }
  for (; i < n; ++i) {
    uint64_t t = mulmod_scalar(g, src[i], p);
    uint64_t s = dst[i] + t;
    dst[i] = s >= p ? s - p : s;
  }
}

void scale_avx2(uint64_t* dst, size_t n, uint64_t g, uint64_t p) {
  ShoupCtx c = make_ctx(g, p);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), mulmod4(c, x));
  }
  for (; i < n; ++i) dst[i] = mulmod_scalar(g, dst[i], p);
}

}  // namespace

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

extern const Dispatch avx2_dispatch{addmul_avx2, scale_avx2, "avx2"};

}  // namespace lieqr::kernels::detail
