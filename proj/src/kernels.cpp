#include "grlie/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

#if defined(__x86_64__)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace grlie::kernels {

void fp_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t m,
                    std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(dst[i]) + static_cast<std::uint64_t>(m) * src[i]) % p);
}

void fp_scale_scalar(std::uint32_t* v, std::uint32_t m, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(m) * v[i] % p);
}

#if defined(__x86_64__)

// Shoup-style multiplication: with m' = floor(m * 2^32 / p) precomputed,
// q = mulhi(x, m'), r = m*x - q*p fits in [0, 2p). p < 2^30 keeps the final
// add below 2^32 before the two conditional subtracts.
namespace {
__attribute__((target("avx2"))) inline __m256i mul_shoup(__m256i x, __m256i m_vec,
                                                         __m256i mshoup_vec, __m256i p_vec) {
  // 32x32->64 products on even and odd lanes
  const __m256i x_odd = _mm256_srli_epi64(x, 32);
  const __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(x, mshoup_vec), 32);
  const __m256i q_odd = _mm256_srli_epi64(_mm256_mul_epu32(x_odd, mshoup_vec), 32);
  const __m256i prod_even = _mm256_mul_epu32(x, m_vec);
  const __m256i prod_odd = _mm256_mul_epu32(x_odd, m_vec);
  const __m256i qp_even = _mm256_mul_epu32(q_even, p_vec);
  const __m256i qp_odd = _mm256_mul_epu32(q_odd, p_vec);
  __m256i r_even = _mm256_sub_epi64(prod_even, qp_even);
  __m256i r_odd = _mm256_sub_epi64(prod_odd, qp_odd);
  // results are < 2p < 2^31; pack low 32 bits back into lane positions
  r_odd = _mm256_slli_epi64(r_odd, 32);
  const __m256i mask = _mm256_set1_epi64x(0x00000000FFFFFFFFll);
  return _mm256_or_si256(_mm256_and_si256(r_even, mask), r_odd);
}

__attribute__((target("avx2"))) inline __m256i reduce_once(__m256i v, __m256i p_vec) {
  const __m256i sub = _mm256_sub_epi32(v, p_vec);
  return _mm256_min_epu32(v, sub);  // wraps below 0 to huge, so min picks the reduced one
}
}  // namespace

__attribute__((target("avx2"))) void fp_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                                  std::uint32_t m, std::uint32_t p,
                                                  std::size_t n) {
  m %= p;
  const std::uint32_t mshoup =
      static_cast<std::uint32_t>((static_cast<std::uint64_t>(m) << 32) / p);
  const __m256i m_vec = _mm256_set1_epi64x(m);
  const __m256i mshoup_vec = _mm256_set1_epi64x(mshoup);
  const __m256i p_vec64 = _mm256_set1_epi64x(p);
  const __m256i p_vec32 = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    const __m256i mx = mul_shoup(x, m_vec, mshoup_vec, p_vec64);  // < 2p
    d = _mm256_add_epi32(d, mx);                                  // < 3p < 2^32
    d = reduce_once(d, p_vec32);
    d = reduce_once(d, p_vec32);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  if (i < n) fp_axpy_scalar(dst + i, src + i, m, p, n - i);
}

__attribute__((target("avx2"))) void fp_scale_avx2(std::uint32_t* v, std::uint32_t m,
                                                   std::uint32_t p, std::size_t n) {
  m %= p;
  const std::uint32_t mshoup =
      static_cast<std::uint32_t>((static_cast<std::uint64_t>(m) << 32) / p);
  const __m256i m_vec = _mm256_set1_epi64x(m);
  const __m256i mshoup_vec = _mm256_set1_epi64x(mshoup);
  const __m256i p_vec64 = _mm256_set1_epi64x(p);
  const __m256i p_vec32 = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    __m256i r = mul_shoup(x, m_vec, mshoup_vec, p_vec64);
    r = reduce_once(r, p_vec32);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), r);
  }
  if (i < n) fp_scale_scalar(v + i, m, p, n - i);
}

#endif  // __x86_64__

#if defined(__aarch64__)

void fp_axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t m, std::uint32_t p,
                  std::size_t n) {
  m %= p;
  const std::uint64_t mshoup = (static_cast<std::uint64_t>(m) << 32) / p;
  const uint32x4_t p_vec = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t d = vld1q_u32(dst + i);
    // Shoup multiply per lane (NEON has no u32 high-multiply), vector add+reduce
    std::uint32_t tmp[4];
    vst1q_u32(tmp, vld1q_u32(src + i));
    for (int k = 0; k < 4; ++k) {
      const std::uint64_t q = (static_cast<std::uint64_t>(tmp[k]) * mshoup) >> 32;
      tmp[k] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(tmp[k]) * m - q * p);
    }
    d = vaddq_u32(d, vld1q_u32(tmp));
    d = vminq_u32(d, vsubq_u32(d, p_vec));
    d = vminq_u32(d, vsubq_u32(d, p_vec));
    vst1q_u32(dst + i, d);
  }
  if (i < n) fp_axpy_scalar(dst + i, src + i, m, p, n - i);
}

void fp_scale_neon(std::uint32_t* v, std::uint32_t m, std::uint32_t p, std::size_t n) {
  fp_scale_scalar(v, m, p, n);
}

#endif  // __aarch64__

namespace {

Dispatch make_dispatch(std::string_view name) {
  if (name == "scalar") return {fp_axpy_scalar, fp_scale_scalar, "scalar"};
#if defined(__x86_64__)
  if (name == "avx2") {
    if (!__builtin_cpu_supports("avx2"))
      throw std::runtime_error("select_kernel: avx2 not supported on this CPU");
    return {fp_axpy_avx2, fp_scale_avx2, "avx2"};
  }
  if (name == "auto") {
    if (__builtin_cpu_supports("avx2")) return {fp_axpy_avx2, fp_scale_avx2, "avx2"};
    return {fp_axpy_scalar, fp_scale_scalar, "scalar"};
  }
#endif
#if defined(__aarch64__)
  if (name == "neon" || name == "auto") return {fp_axpy_neon, fp_scale_neon, "neon"};
#endif
  if (name == "auto") return {fp_axpy_scalar, fp_scale_scalar, "scalar"};
  throw std::runtime_error("select_kernel: unknown kernel '" + std::string(name) + "'");
}

Dispatch& dispatch_slot() {
  static Dispatch d = [] {
    const char* env = std::getenv("GRLIE_KERNEL");
    return make_dispatch(env && *env ? env : "auto");
  }();
  return d;
}

}  // namespace

const Dispatch& active() { return dispatch_slot(); }

void select_kernel(std::string_view name) { dispatch_slot() = make_dispatch(name); }

std::string available_kernels() {
  std::string s = "scalar";
#if defined(__x86_64__)
  if (__builtin_cpu_supports("avx2")) s += ",avx2";
#endif
#if defined(__aarch64__)
  s += ",neon";
#endif
  return s;
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  // extended Euclid
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    const std::int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw std::invalid_argument("fp_inv: not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace grlie::kernels
