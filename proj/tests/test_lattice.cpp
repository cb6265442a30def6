#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmodels/lattice.hpp"

#include <random>

using namespace gmodels;

namespace {

bool is_hermite(const HermiteForm& hf) {
    const IntMatrix& h = hf.form;
    for (std::size_t i = 0; i < hf.rank(); ++i) {
        const std::size_t p = hf.pivots[i];
        if (h(i, p) <= 0) return false;
        if (i > 0 && hf.pivots[i - 1] >= p) return false;
        for (std::size_t c = 0; c < p; ++c)
            if (h(i, c) != 0) return false;
        for (std::size_t r = 0; r < i; ++r)
            if (h(r, p) < 0 || h(r, p) >= h(i, p)) return false;
    }
    for (std::size_t i = hf.rank(); i < h.rows(); ++i)
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (h(i, c) != 0) return false;
    return true;
}

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

} // namespace

TEST_CASE("hermite form of a small matrix") {
    const IntMatrix a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
    const auto hf = hermite_normal_form(a);
    CHECK(is_hermite(hf));
    CHECK(hf.rank() == 3);
    const IntMatrix h = product(hf.transform, a);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(h(i, j) == hf.form(i, j));
    CHECK(hf.form(0, 0) == 2);
    CHECK(hf.form(1, 1) == 6);
    CHECK(hf.form(2, 2) == 12);
}

TEST_CASE("hermite form structure on random matrices") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        const IntMatrix a = random_matrix(rng, r, c, 9);
        const auto hf = hermite_normal_form(a);
        CHECK(is_hermite(hf));
        const IntMatrix h = product(hf.transform, a);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) CHECK(h(i, j) == hf.form(i, j));
    }
}

TEST_CASE("planted solutions are recovered") {
    std::mt19937_64 rng(2024);
    int solved = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        const IntMatrix a = random_matrix(rng, r, c, 12);
        std::vector<BigInt> planted(r);
        for (auto& x : planted) x = static_cast<int>(rng() % 21) - 10;
        const auto target = combine_rows(a, planted);
        const auto sol = solve_integer_combination(a, target);
        REQUIRE(sol.outcome == LatticeSolution::Outcome::Feasible);
        CHECK(combine_rows(a, sol.coefficients) == target);
        ++solved;
    }
    CHECK(solved >= 1000);
}

TEST_CASE("infeasibility certificates") {
    const IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 2}}, 2);
    auto sol = solve_integer_combination(a, {1, 0});
    CHECK(sol.outcome == LatticeSolution::Outcome::IntegrallyInfeasible);
    CHECK_FALSE(sol.witness.empty());

    const IntMatrix b = IntMatrix::from_rows({{1, 1}}, 2);
    sol = solve_integer_combination(b, {1, 2});
    CHECK(sol.outcome == LatticeSolution::Outcome::RationallyInfeasible);
    CHECK(sol.rank == 1);
    CHECK(sol.augmented_rank == 2);

    sol = solve_integer_combination(b, {3, 3});
    CHECK(sol.outcome == LatticeSolution::Outcome::Feasible);
    CHECK(sol.coefficients[0] == 3);
}

TEST_CASE("integer rank") {
    CHECK(integer_rank(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}, 3)) == 2);
    CHECK(integer_rank(IntMatrix(3, 4)) == 0);
}
