#include "gmodels/lattice.hpp"

#include <stdexcept>

namespace gmodels {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::sub_row(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(src, c) != 0) (*this)(dst, c) -= factor * (*this)(src, c);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

namespace {

// Floor division for a positive divisor.
BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
    HermiteForm hf{a, IntMatrix::identity(a.rows()), {}};
    IntMatrix& h = hf.form;
    IntMatrix& u = hf.transform;
    const std::size_t m = h.rows();
    std::size_t r = 0;
    for (std::size_t col = 0; col < h.cols() && r < m; ++col) {
        // Euclid on the column below row r until one nonzero entry remains.
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (h(i, col) != 0 && (best == m || abs(h(i, col)) < abs(h(best, col)))) best = i;
            if (best == m) break;
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, col) == 0) continue;
                const BigInt q = h(i, col) / h(r, col);
                h.sub_row(i, r, q);
                u.sub_row(i, r, q);
                if (h(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h(r, col) == 0) continue;
        if (h(r, col) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            const BigInt q = floor_div(h(i, col), h(r, col));
            h.sub_row(i, r, q);
            u.sub_row(i, r, q);
        }
        hf.pivots.push_back(col);
        ++r;
    }
    return hf;
}

std::size_t integer_rank(const IntMatrix& a) { return hermite_normal_form(a).rank(); }

std::string to_string(LatticeSolution::Outcome o) {
    switch (o) {
    case LatticeSolution::Outcome::Feasible: return "feasible";
    case LatticeSolution::Outcome::RationallyInfeasible: return "rationally-infeasible";
    case LatticeSolution::Outcome::IntegrallyInfeasible: return "integrally-infeasible";
    }
    return "?";
}

std::vector<BigInt> combine_rows(const IntMatrix& a, const std::vector<BigInt>& c) {
    if (c.size() != a.rows()) throw std::invalid_argument("combine_rows: length mismatch");
    std::vector<BigInt> out(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (c[r] != 0)
            for (std::size_t j = 0; j < a.cols(); ++j) out[j] += c[r] * a(r, j);
    return out;
}

LatticeSolution solve_integer_combination(const IntMatrix& a, const std::vector<BigInt>& target) {
    if (target.size() != a.cols()) throw std::invalid_argument("solve_integer_combination: length mismatch");
    LatticeSolution sol;
    const HermiteForm hf = hermite_normal_form(a);
    sol.rank = hf.rank();

    IntMatrix augmented(a.rows() + 1, a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(a.rows(), c) = target[c];
    sol.augmented_rank = integer_rank(augmented);
    if (sol.augmented_rank != sol.rank) {
        sol.outcome = LatticeSolution::Outcome::RationallyInfeasible;
        sol.witness = "rank " + std::to_string(sol.rank) + " < augmented rank " + std::to_string(sol.augmented_rank);
        return sol;
    }

    // Back-substitute through the echelon rows.
    std::vector<BigInt> residual = target;
    std::vector<BigInt> y(hf.rank());
    for (std::size_t i = 0; i < hf.rank(); ++i) {
        const std::size_t col = hf.pivots[i];
        const BigInt& pivot = hf.form(i, col);
        if (residual[col] % pivot != 0) {
            sol.outcome = LatticeSolution::Outcome::IntegrallyInfeasible;
            sol.witness = "column " + std::to_string(col) + ": residual " + residual[col].str() +
                          " is not divisible by lattice pivot " + pivot.str();
            return sol;
        }
        y[i] = residual[col] / pivot;
        for (std::size_t c = col; c < a.cols(); ++c) residual[c] -= y[i] * hf.form(i, c);
    }
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (residual[c] != 0) {
            // Unreachable when the rank test passed; kept as a hard guard.
            sol.outcome = LatticeSolution::Outcome::RationallyInfeasible;
            sol.witness = "nonzero residual at column " + std::to_string(c);
            return sol;
        }
    sol.coefficients.assign(a.rows(), 0);
    for (std::size_t i = 0; i < hf.rank(); ++i)
        for (std::size_t r = 0; r < a.rows(); ++r) sol.coefficients[r] += y[i] * hf.transform(i, r);
    if (combine_rows(a, sol.coefficients) != target) throw std::logic_error("lattice solver: certificate replay failed");
    return sol;
}

} // namespace gmodels
