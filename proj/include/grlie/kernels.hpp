#ifndef GRLIE_KERNELS_HPP
#define GRLIE_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace grlie::kernels {

// Data-parallel mod-p row primitives for the dense F_p elimination path.
// Entries are canonical in [0, p) and p must be an odd prime < 2^30.

// dst[i] = (dst[i] + m * src[i]) mod p
using FpAxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t m,
                          std::uint32_t p, std::size_t n);
// v[i] = (m * v[i]) mod p
using FpScaleFn = void (*)(std::uint32_t* v, std::uint32_t m, std::uint32_t p, std::size_t n);

void fp_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t m,
                    std::uint32_t p, std::size_t n);
void fp_scale_scalar(std::uint32_t* v, std::uint32_t m, std::uint32_t p, std::size_t n);

#if defined(__x86_64__)
void fp_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t m, std::uint32_t p,
                  std::size_t n);
void fp_scale_avx2(std::uint32_t* v, std::uint32_t m, std::uint32_t p, std::size_t n);
#endif
#if defined(__aarch64__)
void fp_axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t m, std::uint32_t p,
                  std::size_t n);
void fp_scale_neon(std::uint32_t* v, std::uint32_t m, std::uint32_t p, std::size_t n);
#endif

// Dispatch table, resolved once at startup (CPU detection) and overridable
// with GRLIE_KERNEL=scalar|avx2|neon or select_kernel().
struct Dispatch {
  FpAxpyFn axpy;
  FpScaleFn scale;
  const char* name;
};

const Dispatch& active();
void select_kernel(std::string_view name);  // "auto", "scalar", "avx2", "neon"
std::string available_kernels();

inline void fp_axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t m,
                    std::uint32_t p, std::size_t n) {
  active().axpy(dst, src, m, p, n);
}
inline void fp_scale(std::uint32_t* v, std::uint32_t m, std::uint32_t p, std::size_t n) {
  active().scale(v, m, p, n);
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

}  // namespace grlie::kernels

#endif
