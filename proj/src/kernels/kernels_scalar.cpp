#include "gmodels/kernels.hpp"

namespace gmodels::kernels::scalar {

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c,
              std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(c) * x[i]) % p);
}

std::uint32_t dot_mod(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                      std::uint32_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % p;
    return static_cast<std::uint32_t>(acc);
}

void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * y[i] % p);
}

} // namespace gmodels::kernels::scalar
