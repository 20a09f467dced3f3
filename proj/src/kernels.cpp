#include <gccm/kernels.hpp>

#include <algorithm>

namespace gccm::kernels {

namespace detail {

std::uint64_t min_sum_u32_scalar(const std::uint32_t *a, const std::uint32_t *b, std::size_t n) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc += std::min(a[i], b[i]);
    return acc;
}

void min_inplace_u32_scalar(std::uint32_t *dst, const std::uint32_t *src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = std::min(dst[i], src[i]);
}

std::uint64_t sum_u32_scalar(const std::uint32_t *a, std::size_t n) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i];
    return acc;
}

} // namespace detail

namespace {

bool cpuHasAvx2() {
#ifdef GCCM_HAVE_AVX2
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const bool useAvx2 = cpuHasAvx2();

} // namespace

std::uint64_t min_sum_u32(const std::uint32_t *a, const std::uint32_t *b, std::size_t n) {
#ifdef GCCM_HAVE_AVX2
    if (useAvx2)
        return detail::min_sum_u32_avx2(a, b, n);
#endif
    return detail::min_sum_u32_scalar(a, b, n);
}

void min_inplace_u32(std::uint32_t *dst, const std::uint32_t *src, std::size_t n) {
#ifdef GCCM_HAVE_AVX2
    if (useAvx2) {
        detail::min_inplace_u32_avx2(dst, src, n);
        return;
    }
#endif
    detail::min_inplace_u32_scalar(dst, src, n);
}

std::uint64_t sum_u32(const std::uint32_t *a, std::size_t n) {
#ifdef GCCM_HAVE_AVX2
    if (useAvx2)
        return detail::sum_u32_avx2(a, n);
#endif
    return detail::sum_u32_scalar(a, n);
}

const char *active_backend() {
    return useAvx2 ? "avx2" : "scalar";
}

} // namespace gccm::kernels
