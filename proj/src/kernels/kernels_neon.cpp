#include "gmodels/kernels.hpp"

#if defined(GMODELS_HAVE_NEON_KERNELS)

#include <arm_neon.h>

#include <algorithm>

namespace gmodels::kernels::neon {

namespace {

inline float64x2_t mulmod_f64(float64x2_t x, float64x2_t c, float64x2_t p, float64x2_t pinv) {
    const float64x2_t prod = vmulq_f64(x, c);
    const float64x2_t q = vrndmq_f64(vmulq_f64(prod, pinv));
    float64x2_t r = vfmsq_f64(prod, q, p);
    const uint64x2_t neg = vcltq_f64(r, vdupq_n_f64(0.0));
    r = vaddq_f64(r, vreinterpretq_f64_u64(vandq_u64(neg, vreinterpretq_u64_f64(p))));
    const uint64x2_t big = vcgeq_f64(r, p);
    return vsubq_f64(r, vreinterpretq_f64_u64(vandq_u64(big, vreinterpretq_u64_f64(p))));
}

inline float64x2_t load2(const std::uint32_t* src) {
    return vcvtq_f64_u64(vmovl_u32(vld1_u32(src)));
}

inline void store2(std::uint32_t* dst, float64x2_t v) {
    vst1_u32(dst, vmovn_u64(vcvtq_u64_f64(v)));
}

} // namespace

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c,
              std::uint32_t p) {
    if (p >= kSimdPrimeLimit) return scalar::axpy_mod(y, x, n, c, p);
    const float64x2_t vp = vdupq_n_f64(p), vinv = vdupq_n_f64(1.0 / p), vc = vdupq_n_f64(c);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t r = vaddq_f64(mulmod_f64(load2(x + i), vc, vp, vinv), load2(y + i));
        const uint64x2_t big = vcgeq_f64(r, vp);
        r = vsubq_f64(r, vreinterpretq_f64_u64(vandq_u64(big, vreinterpretq_u64_f64(vp))));
        store2(y + i, r);
    }
    scalar::axpy_mod(y + i, x + i, n - i, c, p);
}

std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                      std::uint32_t p) {
    if (p >= kSimdPrimeLimit) return scalar::dot_mod(a, b, n, p);
    constexpr std::size_t kBlock = 1u << 11;
    std::uint64_t total = 0;
    std::size_t i = 0;
    while (i + 2 <= n) {
        uint64x2_t acc = vdupq_n_u64(0);
        const std::size_t stop = std::min(n - (n - i) % 2, i + kBlock);
        for (; i < stop; i += 2) acc = vmlal_u32(acc, vld1_u32(a + i), vld1_u32(b + i));
        total = (total + vgetq_lane_u64(acc, 0) % p + vgetq_lane_u64(acc, 1) % p) % p;
    }
    total = (total + scalar::dot_mod(a + i, b + i, n - i, p)) % p;
    return static_cast<std::uint32_t>(total);
}

void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p) {
    if (p >= kSimdPrimeLimit) return scalar::scale_mod(y, n, c, p);
    const float64x2_t vp = vdupq_n_f64(p), vinv = vdupq_n_f64(1.0 / p), vc = vdupq_n_f64(c);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) store2(y + i, mulmod_f64(load2(y + i), vc, vp, vinv));
    scalar::scale_mod(y + i, n - i, c, p);
}

} // namespace gmodels::kernels::neon

#endif
