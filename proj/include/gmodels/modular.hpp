#pragma once

// Arithmetic in the prime field F_p used for every character computation.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gmodels {

using Residue = std::uint32_t;

/// The prime field F_p, p < 2^31. All values are kept reduced in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = 2) : p_(p) {
        if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("PrimeField: prime out of range");
    }

    std::uint32_t prime() const { return p_; }

    Residue reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Residue pow(Residue a, std::uint64_t e) const {
        Residue r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Residue inv(Residue a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }
    Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

    /// Symmetric lift to (-p/2, p/2].
    std::int64_t lift(Residue a) const {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    /// Smallest generator of F_p^*.
    Residue primitive_root() const;

    /// A primitive n-th root of unity; requires n | p - 1.
    Residue root_of_unity(std::uint32_t n) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

} // namespace gmodels
