#pragma once

// Integer lattices: Hermite normal form and integral solvability of
// c^T A = b. Entries are arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace gmodels {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);
    /// row[dst] -= factor * row[src]
    void sub_row(std::size_t dst, std::size_t src, const BigInt& factor);
    void negate_row(std::size_t r);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Row-style HNF: transform * input == form, transform unimodular; nonzero
/// rows of `form` come first, pivots strictly increase and are positive, and
/// entries above a pivot lie in [0, pivot).
struct HermiteForm {
    IntMatrix form;
    IntMatrix transform;
    std::vector<std::size_t> pivots; // pivot column per nonzero row
    std::size_t rank() const { return pivots.size(); }
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// Rank over Q.
std::size_t integer_rank(const IntMatrix& a);

struct LatticeSolution {
    enum class Outcome { Feasible, RationallyInfeasible, IntegrallyInfeasible };
    Outcome outcome = Outcome::Feasible;
    std::vector<BigInt> coefficients; // when feasible: coefficients^T A == target
    std::size_t rank = 0;
    std::size_t augmented_rank = 0;
    std::string witness;
};

std::string to_string(LatticeSolution::Outcome o);

/// Integer vector c with sum_i c_i * row_i(A) == target, or a certificate of
/// rational infeasibility (rank witness) or integral infeasibility (a pivot
/// congruence the target violates).
LatticeSolution solve_integer_combination(const IntMatrix& a, const std::vector<BigInt>& target);

/// sum_i c_i * row_i(A)
std::vector<BigInt> combine_rows(const IntMatrix& a, const std::vector<BigInt>& c);

} // namespace gmodels
