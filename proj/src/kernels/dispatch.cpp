#include "gmodels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace gmodels::kernels {

namespace {

Isa detect() {
    if (const char* env = std::getenv("GMODELS_KERNELS"); env && std::strcmp(env, "scalar") == 0)
        return Isa::Scalar;
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
    if (isa_available(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

void check_sizes(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("kernels: length mismatch");
}

} // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "?";
}

bool isa_available(Isa isa) {
    switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(GMODELS_HAVE_AVX2_KERNELS)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Isa::Neon:
#if defined(GMODELS_HAVE_NEON_KERNELS)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (!isa_available(isa)) throw std::runtime_error("kernels: ISA not available on this machine");
    current().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
              std::uint32_t p) {
    check_sizes(y.size(), x.size());
    switch (active_isa()) {
#if defined(GMODELS_HAVE_AVX2_KERNELS)
    case Isa::Avx2: return avx2::axpy_mod(y.data(), x.data(), y.size(), c, p);
#endif
#if defined(GMODELS_HAVE_NEON_KERNELS)
    case Isa::Neon: return neon::axpy_mod(y.data(), x.data(), y.size(), c, p);
#endif
    default: return scalar::axpy_mod(y.data(), x.data(), y.size(), c, p);
    }
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p) {
    check_sizes(a.size(), b.size());
    switch (active_isa()) {
#if defined(GMODELS_HAVE_AVX2_KERNELS)
    case Isa::Avx2: return avx2::dot_mod(a.data(), b.data(), a.size(), p);
#endif
#if defined(GMODELS_HAVE_NEON_KERNELS)
    case Isa::Neon: return neon::dot_mod(a.data(), b.data(), a.size(), p);
#endif
    default: return scalar::dot_mod(a.data(), b.data(), a.size(), p);
    }
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t p) {
    switch (active_isa()) {
#if defined(GMODELS_HAVE_AVX2_KERNELS)
    case Isa::Avx2: return avx2::scale_mod(y.data(), y.size(), c, p);
#endif
#if defined(GMODELS_HAVE_NEON_KERNELS)
    case Isa::Neon: return neon::scale_mod(y.data(), y.size(), c, p);
#endif
    default: return scalar::scale_mod(y.data(), y.size(), c, p);
    }
}

} // namespace gmodels::kernels
