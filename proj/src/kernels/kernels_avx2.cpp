#include "gmodels/kernels.hpp"

#if defined(GMODELS_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <algorithm>

#define GMODELS_AVX2 __attribute__((target("avx2,fma")))

namespace gmodels::kernels::avx2 {

namespace {

// (c * x) mod p for four lanes held as doubles. c * x < 2^52 is exact, and the
// floor of the scaled quotient is off by at most one, hence the two fixups.
GMODELS_AVX2 inline __m256d mulmod_pd(__m256d x, __m256d c, __m256d p, __m256d pinv) {
    const __m256d prod = _mm256_mul_pd(x, c);
    const __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, pinv));
    __m256d r = _mm256_fnmadd_pd(q, p, prod);
    const __m256d zero = _mm256_setzero_pd();
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
    return r;
}

GMODELS_AVX2 inline __m256d load4(const std::uint32_t* src) {
    return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src)));
}

GMODELS_AVX2 inline void store4(std::uint32_t* dst, __m256d v) {
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), _mm256_cvtpd_epi32(v));
}

} // namespace

GMODELS_AVX2 void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                           std::uint32_t c, std::uint32_t p) {
    if (p >= kSimdPrimeLimit) return scalar::axpy_mod(y, x, n, c, p);
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_add_pd(mulmod_pd(load4(x + i), vc, vp, vinv), load4(y + i));
        r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
        store4(y + i, r);
    }
    scalar::axpy_mod(y + i, x + i, n - i, c, p);
}

GMODELS_AVX2 std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                                   std::uint32_t p) {
    if (p >= kSimdPrimeLimit) return scalar::dot_mod(a, b, n, p);
    // Products are < 2^52; 2^11 of them fit a 64-bit lane before reduction.
    constexpr std::size_t kBlock = 1u << 11;
    std::uint64_t total = 0;
    std::size_t i = 0;
    while (i + 4 <= n) {
        __m256i acc = _mm256_setzero_si256();
        const std::size_t stop = std::min(n - (n - i) % 4, i + kBlock);
        for (; i < stop; i += 4) {
            const __m256i va = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
            const __m256i vb = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
            acc = _mm256_add_epi64(acc, _mm256_mul_epu32(va, vb));
        }
        alignas(32) std::uint64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        for (auto lane : lanes) total = (total + lane % p) % p;
    }
    total = (total + scalar::dot_mod(a + i, b + i, n - i, p)) % p;
    return static_cast<std::uint32_t>(total);
}

GMODELS_AVX2 void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p) {
    if (p >= kSimdPrimeLimit) return scalar::scale_mod(y, n, c, p);
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store4(y + i, mulmod_pd(load4(y + i), vc, vp, vinv));
    scalar::scale_mod(y + i, n - i, c, p);
}

} // namespace gmodels::kernels::avx2

#endif
