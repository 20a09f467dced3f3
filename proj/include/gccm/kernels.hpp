#pragma once

// Flat array kernels shared by the subset-evaluation paths (exhaustive
// enumeration, branch-and-bound, the builtin ILP backend). Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant; the
// variant is picked once at startup based on what the CPU supports. The two
// must be bit-identical on every input (see the kernel equivalence tests).

#include <cstddef>
#include <cstdint>

namespace gccm::kernels {

/// sum_i min(a[i], b[i])
std::uint64_t min_sum_u32(const std::uint32_t *a, const std::uint32_t *b, std::size_t n);

/// dst[i] = min(dst[i], src[i])
void min_inplace_u32(std::uint32_t *dst, const std::uint32_t *src, std::size_t n);

/// sum_i a[i]
std::uint64_t sum_u32(const std::uint32_t *a, std::size_t n);

/// Name of the selected implementation, "avx2" or "scalar".
const char *active_backend();

namespace detail {

std::uint64_t min_sum_u32_scalar(const std::uint32_t *a, const std::uint32_t *b, std::size_t n);
void min_inplace_u32_scalar(std::uint32_t *dst, const std::uint32_t *src, std::size_t n);
std::uint64_t sum_u32_scalar(const std::uint32_t *a, std::size_t n);

#ifdef GCCM_HAVE_AVX2
std::uint64_t min_sum_u32_avx2(const std::uint32_t *a, const std::uint32_t *b, std::size_t n);
void min_inplace_u32_avx2(std::uint32_t *dst, const std::uint32_t *src, std::size_t n);
std::uint64_t sum_u32_avx2(const std::uint32_t *a, std::size_t n);
#endif

} // namespace detail
} // namespace gccm::kernels
