#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmodels/kernels.hpp"
#include "gmodels/linalg.hpp"

#include <random>
#include <vector>

using namespace gmodels;
namespace k = gmodels::kernels;

namespace {

std::vector<std::uint32_t> random_residues(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

const std::uint32_t kPrimes[] = {2, 3, 61, 241, 65537, 1000003, (1u << 26) - 5, 2147483647u};

} // namespace

TEST_CASE("scalar kernels against direct 64-bit arithmetic") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : kPrimes) {
        for (std::size_t n : {0u, 1u, 7u, 8u, 33u, 300u}) {
            auto a = random_residues(rng, n, p), b = random_residues(rng, n, p);
            std::uint64_t dot = 0;
            for (std::size_t i = 0; i < n; ++i) dot = (dot + std::uint64_t(a[i]) * b[i]) % p;
            CHECK(k::scalar::dot_mod(a.data(), b.data(), n, p) == dot);

            const std::uint32_t c = random_residues(rng, 1, p)[0];
            auto y = a;
            k::scalar::axpy_mod(y.data(), b.data(), n, c, p);
            for (std::size_t i = 0; i < n; ++i) CHECK(y[i] == (a[i] + std::uint64_t(c) * b[i]) % p);
            y = a;
            k::scalar::scale_mod(y.data(), n, c, p);
            for (std::size_t i = 0; i < n; ++i) CHECK(y[i] == std::uint64_t(c) * a[i] % p);
        }
    }
}

#ifdef GMODELS_HAVE_AVX2_KERNELS
TEST_CASE("avx2 kernels match the scalar reference") {
    if (!k::isa_available(k::Isa::Avx2)) return;
    std::mt19937_64 rng(12);
    for (std::uint32_t p : kPrimes) {
        if (p >= k::kSimdPrimeLimit) continue;
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 5000)(rng);
            auto a = random_residues(rng, n, p), b = random_residues(rng, n, p);
            const std::uint32_t c = random_residues(rng, 1, p)[0];
            CHECK(k::avx2::dot_mod(a.data(), b.data(), n, p) == k::scalar::dot_mod(a.data(), b.data(), n, p));
            auto y1 = a, y2 = a;
            k::avx2::axpy_mod(y1.data(), b.data(), n, c, p);
            k::scalar::axpy_mod(y2.data(), b.data(), n, c, p);
            CHECK(y1 == y2);
            y1 = a, y2 = a;
            k::avx2::scale_mod(y1.data(), n, c, p);
            k::scalar::scale_mod(y2.data(), n, c, p);
            CHECK(y1 == y2);
        }
    }
    // extreme residues
    const std::uint32_t p = (1u << 26) - 5;
    std::vector<std::uint32_t> a(4099, p - 1), b(4099, p - 1);
    CHECK(k::avx2::dot_mod(a.data(), b.data(), a.size(), p) == k::scalar::dot_mod(a.data(), b.data(), a.size(), p));
}
#endif

TEST_CASE("dispatch yields identical linear algebra on every available isa") {
    const PrimeField f(1000003);
    std::mt19937_64 rng(5);
    ModMatrix m(40, 40);
    for (std::size_t i = 0; i < 40; ++i)
        for (std::size_t j = 0; j < 40; ++j) m(i, j) = random_residues(rng, 1, f.prime())[0] % 7;
    std::vector<std::vector<Residue>> polys;
    std::vector<ModMatrix> echelons;
    for (k::Isa isa : {k::Isa::Scalar, k::Isa::Avx2, k::Isa::Neon}) {
        if (!k::isa_available(isa)) continue;
        k::force_isa(isa);
        polys.push_back(characteristic_polynomial(f, m));
        ModMatrix e = m;
        rref(f, e);
        echelons.push_back(e);
    }
    k::force_isa(k::Isa::Scalar);
    for (std::size_t i = 1; i < polys.size(); ++i) {
        CHECK(polys[i] == polys[0]);
        CHECK(echelons[i] == echelons[0]);
    }
}

TEST_CASE("characteristic polynomial of a companion matrix") {
    const PrimeField f(101);
    // x^3 - 2x^2 + 5x - 7
    ModMatrix c(3, 3);
    c(1, 0) = 1;
    c(2, 1) = 1;
    c(0, 2) = 7;
    c(1, 2) = f.reduce(-5);
    c(2, 2) = 2;
    const auto poly = characteristic_polynomial(f, c);
    REQUIRE(poly.size() == 4);
    CHECK(poly[0] == f.reduce(-7));
    CHECK(poly[1] == 5);
    CHECK(poly[2] == f.reduce(-2));
    CHECK(poly[3] == 1);
}

TEST_CASE("nullspace vectors are annihilated") {
    const PrimeField f(61);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        ModMatrix m(6, 9);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 9; ++j) m(i, j) = random_residues(rng, 1, 61)[0];
        const ModMatrix n = nullspace(f, m);
        CHECK(n.rows() + rank(f, m) == 9);
        for (std::size_t v = 0; v < n.rows(); ++v)
            for (std::size_t i = 0; i < 6; ++i) {
                Residue s = 0;
                for (std::size_t j = 0; j < 9; ++j) s = f.add(s, f.mul(m(i, j), n(v, j)));
                CHECK(s == 0);
            }
    }
}

TEST_CASE("prime field basics") {
    const PrimeField f(73);
    CHECK(f.lift(72) == -1);
    CHECK(f.lift(36) == 36);
    CHECK(f.lift(37) == -36);
    const Residue z = f.root_of_unity(8);
    CHECK(f.pow(z, 8) == 1);
    CHECK(f.pow(z, 4) != 1);
    CHECK(is_prime(2147483647u));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}
