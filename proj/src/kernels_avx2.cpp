// AVX2 variants of the flat array kernels. This translation unit is compiled
// with -mavx2; callers reach it only after the runtime CPU check.

#include <gccm/kernels.hpp>

#ifdef GCCM_HAVE_AVX2

#include <immintrin.h>

namespace gccm::kernels::detail {

namespace {

// Horizontal sum of a 4x u64 accumulator.
inline std::uint64_t hsum_epi64(__m256i v) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

// Widen 8x u32 to two 4x u64 lanes and add both into acc.
inline __m256i accumulate_u32x8(__m256i acc, __m256i v) {
    const __m128i lo = _mm256_castsi256_si128(v);
    const __m128i hi = _mm256_extracti128_si256(v, 1);
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(lo));
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(hi));
    return acc;
}

} // namespace

std::uint64_t min_sum_u32_avx2(const std::uint32_t *a, const std::uint32_t *b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + i));
        acc = accumulate_u32x8(acc, _mm256_min_epu32(va, vb));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; i < n; ++i)
        total += a[i] < b[i] ? a[i] : b[i];
    return total;
}

void min_inplace_u32_avx2(std::uint32_t *dst, const std::uint32_t *src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + i));
        const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_min_epu32(vd, vs));
    }
    for (; i < n; ++i)
        if (src[i] < dst[i])
            dst[i] = src[i];
}

std::uint64_t sum_u32_avx2(const std::uint32_t *a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
        acc = accumulate_u32x8(acc, v);
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; i < n; ++i)
        total += a[i];
    return total;
}

} // namespace gccm::kernels::detail

#endif // GCCM_HAVE_AVX2
