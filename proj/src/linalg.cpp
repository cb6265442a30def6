#include "gmodels/linalg.hpp"

#include "gmodels/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmodels {

ModMatrix ModMatrix::identity(std::size_t n) {
    ModMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ModMatrix ModMatrix::transposed() const {
    ModMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ModMatrix multiply(const PrimeField& f, const ModMatrix& a, const ModMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    ModMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (Residue c = a(i, k)) kernels::axpy_mod(out.row(i), b.row(k), c, f.prime());
    return out;
}

std::vector<std::size_t> rref(const PrimeField& f, ModMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            auto a = m.row(piv), b = m.row(r);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        kernels::scale_mod(m.row(r), f.inv(m(r, c)), f.prime());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            kernels::axpy_mod(m.row(i), m.row(r), f.neg(m(i, c)), f.prime());
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const PrimeField& f, ModMatrix m) { return rref(f, m).size(); }

ModMatrix nullspace(const PrimeField& f, ModMatrix m) {
    const auto pivots = rref(f, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    ModMatrix basis(free_cols.size(), m.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis(k, fc) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(k, pivots[r]) = f.neg(m(r, fc));
    }
    return basis;
}

// Hessenberg reduction followed by the standard determinant recurrence.
std::vector<Residue> characteristic_polynomial(const PrimeField& f, const ModMatrix& input) {
    const std::size_t n = input.rows();
    if (input.cols() != n) throw std::invalid_argument("characteristic_polynomial: not square");
    ModMatrix h = input;
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && h(piv, m - 1) == 0) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
        }
        const Residue inv = f.inv(h(m, m - 1));
        for (std::size_t i = m + 1; i < n; ++i) {
            const Residue u = f.mul(h(i, m - 1), inv);
            if (u == 0) continue;
            for (std::size_t j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(u, h(m, j)));
            for (std::size_t j = 0; j < n; ++j) h(j, m) = f.add(h(j, m), f.mul(u, h(j, i)));
        }
    }
    // p_k = characteristic polynomial of the leading k x k block.
    std::vector<std::vector<Residue>> p(n + 1);
    p[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Residue> next(k + 1, 0);
        // (x - h_kk) p_{k-1}
        for (std::size_t d = 0; d < k; ++d) {
            next[d + 1] = f.add(next[d + 1], p[k - 1][d]);
            next[d] = f.sub(next[d], f.mul(h(k - 1, k - 1), p[k - 1][d]));
        }
        Residue prod = 1;
        for (std::size_t i = 1; i < k; ++i) {
            // row index k-1-i, sub-diagonal product h(k-1,k-2)...h(k-i,k-i-1)
            prod = f.mul(prod, h(k - i, k - i - 1));
            const Residue coeff = f.mul(prod, h(k - i - 1, k - 1));
            if (coeff == 0) continue;
            for (std::size_t d = 0; d < p[k - i - 1].size(); ++d)
                next[d] = f.sub(next[d], f.mul(coeff, p[k - i - 1][d]));
        }
        p[k] = std::move(next);
    }
    return p[n];
}

Residue evaluate(const PrimeField& f, std::span<const Residue> poly, Residue x) {
    Residue acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

std::vector<Residue> roots(const PrimeField& f, std::span<const Residue> poly) {
    std::vector<Residue> out;
    for (Residue x = 0; x < f.prime(); ++x)
        if (evaluate(f, poly, x) == 0) out.push_back(x);
    return out;
}

} // namespace gmodels
