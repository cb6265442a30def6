#pragma once

// Mod-p vector kernels behind the F_p linear algebra.
//
// Every kernel has a scalar reference implementation; SIMD variants (AVX2 on
// x86-64, NEON on AArch64) are compiled side by side and chosen at runtime.
// Inputs must be reduced residues. The SIMD paths require p < 2^26 and fall
// back to the scalar path above that.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace gmodels::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// True when this build and the running CPU can execute `isa`.
bool isa_available(Isa isa);

/// ISA used by the dispatching entry points. Chosen once: the best available
/// ISA unless the environment variable GMODELS_KERNELS=scalar forces the
/// reference path.
Isa active_isa();

/// Override the dispatch choice (tests and benchmarks). Throws if unavailable.
void force_isa(Isa isa);

inline constexpr std::uint32_t kSimdPrimeLimit = 1u << 26;

/// y[i] <- (y[i] + c * x[i]) mod p
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
              std::uint32_t p);

/// sum_i a[i] * b[i] mod p
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p);

/// y[i] <- c * y[i] mod p
void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c,
              std::uint32_t p);
std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                      std::uint32_t p);
void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define GMODELS_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c,
              std::uint32_t p);
std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                      std::uint32_t p);
void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p);
} // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define GMODELS_HAVE_NEON_KERNELS 1
namespace neon {
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c,
              std::uint32_t p);
std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                      std::uint32_t p);
void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p);
} // namespace neon
#endif

} // namespace gmodels::kernels
