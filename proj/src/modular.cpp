#include "gmodels/modular.hpp"

namespace gmodels {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Residue PrimeField::primitive_root() const {
    std::vector<std::uint32_t> factors;
    std::uint32_t m = p_ - 1;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) factors.push_back(m);
    for (Residue g = 1; g < p_; ++g) {
        bool ok = true;
        for (auto f : factors)
            if (pow(g, (p_ - 1) / f) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

Residue PrimeField::root_of_unity(std::uint32_t n) const {
    if (n == 0 || (p_ - 1) % n != 0)
        throw std::invalid_argument("root_of_unity: n does not divide p - 1");
    return pow(primitive_root(), (p_ - 1) / n);
}

} // namespace gmodels
