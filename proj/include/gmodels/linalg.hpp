#pragma once

// Dense linear algebra over F_p. Row operations go through the mod-p kernels.

#include "gmodels/modular.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gmodels {

class ModMatrix {
public:
    ModMatrix() = default;
    ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static ModMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    ModMatrix transposed() const;

    bool operator==(const ModMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> data_;
};

ModMatrix multiply(const PrimeField& f, const ModMatrix& a, const ModMatrix& b);

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> rref(const PrimeField& f, ModMatrix& m);

std::size_t rank(const PrimeField& f, ModMatrix m);

/// Basis of {v : m v = 0}, one basis vector per row of the result.
ModMatrix nullspace(const PrimeField& f, ModMatrix m);

/// Coefficients c_0..c_n of det(x I - m), c_n = 1.
std::vector<Residue> characteristic_polynomial(const PrimeField& f, const ModMatrix& m);

Residue evaluate(const PrimeField& f, std::span<const Residue> poly, Residue x);

/// All roots in F_p of a polynomial given by ascending coefficients,
/// found by exhaustive evaluation (p is small for every group in range).
std::vector<Residue> roots(const PrimeField& f, std::span<const Residue> poly);

} // namespace gmodels
