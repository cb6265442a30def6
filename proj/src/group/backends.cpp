#include "gmodels/group.hpp"
#include "gmodels/modular.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gmodels {

std::string GroupBackend::describe(const Word& a) const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ']';
    return os.str();
}

namespace {

// ---------------------------------------------------------------------------
// S_n acting on {0..n-1}; (ab)(i) = a(b(i)).

class SymmetricBackend final : public GroupBackend {
public:
    explicit SymmetricBackend(int n) : n_(n) {
        factorials_.assign(static_cast<std::size_t>(n) + 1, 1);
        for (int i = 1; i <= n; ++i) factorials_[i] = factorials_[i - 1] * static_cast<std::uint64_t>(i);
    }

    std::string tag() const override { return "permutation"; }
    std::uint64_t order_hint() const override { return factorials_[n_]; }

    std::vector<Word> elements() const override {
        std::vector<Word> out;
        Word w(n_);
        std::iota(w.begin(), w.end(), 0);
        do {
            out.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
        return out;
    }
    Word identity() const override {
        Word w(n_);
        std::iota(w.begin(), w.end(), 0);
        return w;
    }
    Word multiply(const Word& a, const Word& b) const override {
        Word r(n_);
        for (int i = 0; i < n_; ++i) r[i] = a[b[i]];
        return r;
    }
    Word inverse(const Word& a) const override {
        Word r(n_);
        for (int i = 0; i < n_; ++i) r[a[i]] = i;
        return r;
    }
    std::string describe(const Word& a) const override {
        std::ostringstream os;
        std::vector<bool> seen(n_, false);
        for (int i = 0; i < n_; ++i) {
            if (seen[i] || a[i] == i) continue;
            os << '(';
            for (int j = i; !seen[j]; j = a[j]) {
                seen[j] = true;
                os << (j == i ? "" : " ") << j + 1;
            }
            os << ')';
        }
        const auto s = os.str();
        return s.empty() ? "()" : s;
    }
    std::vector<Word> generators() const override {
        if (n_ < 2) return {};
        Word swap = identity();
        std::swap(swap[0], swap[1]);
        Word cycle(n_);
        for (int i = 0; i < n_; ++i) cycle[i] = (i + 1) % n_;
        return n_ == 2 ? std::vector<Word>{swap} : std::vector<Word>{swap, cycle};
    }
    // Lexicographic rank (Lehmer code).
    std::optional<std::size_t> rank(const Word& a) const override {
        std::uint64_t r = 0;
        for (int i = 0; i < n_; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < n_; ++j) smaller += a[j] < a[i];
            r += smaller * factorials_[n_ - 1 - i];
        }
        return static_cast<std::size_t>(r);
    }

private:
    int n_;
    std::vector<std::uint64_t> factorials_;
};

// ---------------------------------------------------------------------------

class CyclicBackend final : public GroupBackend {
public:
    explicit CyclicBackend(int n) : n_(n) {}
    std::string tag() const override { return "cyclic"; }
    std::uint64_t order_hint() const override { return static_cast<std::uint64_t>(n_); }
    std::vector<Word> elements() const override {
        std::vector<Word> out;
        for (int i = 0; i < n_; ++i) out.push_back({i});
        return out;
    }
    Word identity() const override { return {0}; }
    Word multiply(const Word& a, const Word& b) const override { return {(a[0] + b[0]) % n_}; }
    Word inverse(const Word& a) const override { return {(n_ - a[0]) % n_}; }
    std::string describe(const Word& a) const override { return "c^" + std::to_string(a[0]); }
    std::vector<Word> generators() const override {
        if (n_ == 1) return {};
        return {{1}};
    }
    std::optional<std::size_t> rank(const Word& a) const override { return static_cast<std::size_t>(a[0]); }

private:
    int n_;
};

// ---------------------------------------------------------------------------
// 2x2 matrices over F_q acting on column vectors. Word = {a, b, c, d} for
// [[a, b], [c, d]].

class MatrixBackend final : public GroupBackend {
public:
    MatrixBackend(GroupSpec::Kind kind, int q) : kind_(kind), q_(q), field_(static_cast<std::uint32_t>(q)) {}

    std::string tag() const override {
        switch (kind_) {
        case GroupSpec::Kind::GL: return "matrix-gl";
        case GroupSpec::Kind::SL: return "matrix-sl";
        default: return "projective";
        }
    }
    std::uint64_t order_hint() const override {
        const std::uint64_t q = q_;
        if (kind_ == GroupSpec::Kind::GL) return (q * q - 1) * (q * q - q);
        return q * (q * q - 1);
    }
    std::vector<Word> elements() const override {
        std::vector<Word> out;
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b)
                for (int c = 0; c < q_; ++c)
                    for (int d = 0; d < q_; ++d) {
                        Word w{a, b, c, d};
                        const int det = determinant(w);
                        if (det == 0) continue;
                        if (kind_ == GroupSpec::Kind::SL && det != 1) continue;
                        if (kind_ == GroupSpec::Kind::PGL && normalize(w) != w) continue;
                        out.push_back(std::move(w));
                    }
        return out;
    }
    Word identity() const override { return {1, 0, 0, 1}; }
    Word multiply(const Word& x, const Word& y) const override {
        Word r{
            mod(x[0] * y[0] + x[1] * y[2]), mod(x[0] * y[1] + x[1] * y[3]),
            mod(x[2] * y[0] + x[3] * y[2]), mod(x[2] * y[1] + x[3] * y[3]),
        };
        return kind_ == GroupSpec::Kind::PGL ? normalize(r) : r;
    }
    Word inverse(const Word& x) const override {
        const int inv = static_cast<int>(field_.inv(static_cast<Residue>(determinant(x))));
        Word r{mod(x[3] * inv), mod(-x[1] * inv), mod(-x[2] * inv), mod(x[0] * inv)};
        return kind_ == GroupSpec::Kind::PGL ? normalize(r) : r;
    }
    std::string describe(const Word& x) const override {
        std::ostringstream os;
        os << "[[" << x[0] << ',' << x[1] << "],[" << x[2] << ',' << x[3] << "]]";
        return os.str();
    }

private:
    int mod(int v) const { return ((v % q_) + q_) % q_; }
    int determinant(const Word& x) const { return mod(x[0] * x[3] - x[1] * x[2]); }
    Word normalize(const Word& x) const {
        for (int v : x) {
            if (v == 0) continue;
            const int inv = static_cast<int>(field_.inv(static_cast<Residue>(v)));
            Word r(4);
            for (int i = 0; i < 4; ++i) r[i] = mod(x[i] * inv);
            return r;
        }
        return x;
    }

    GroupSpec::Kind kind_;
    int q_;
    PrimeField field_;
};

// ---------------------------------------------------------------------------

class CayleyBackend final : public GroupBackend {
public:
    CayleyBackend(std::vector<std::vector<int>> table, std::vector<std::string> names)
        : table_(std::move(table)), names_(std::move(names)) {
        const std::size_t n = table_.size();
        if (n == 0) throw SpecError("Cayley table: empty");
        for (const auto& row : table_) {
            if (row.size() != n) throw SpecError("Cayley table: not square");
            for (int v : row)
                if (v < 0 || static_cast<std::size_t>(v) >= n)
                    throw SpecError("Cayley table: entry out of range");
        }
        for (std::size_t i = 0; i < n; ++i)
            if (table_[0][i] != static_cast<int>(i) || table_[i][0] != static_cast<int>(i))
                throw SpecError("Cayley table: index 0 is not the identity");
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<char> row_seen(n, 0), col_seen(n, 0);
            for (std::size_t j = 0; j < n; ++j) {
                if (row_seen[table_[i][j]]++ || col_seen[table_[j][i]]++)
                    throw SpecError("Cayley table: not a Latin square");
            }
        }
        inverses_.assign(n, -1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (table_[i][j] == 0) inverses_[i] = static_cast<int>(j);
        for (std::size_t i = 0; i < n; ++i)
            if (inverses_[i] < 0 || table_[inverses_[i]][i] != 0)
                throw SpecError("Cayley table: element without two-sided inverse");
    }

    std::string tag() const override { return "cayley"; }
    std::uint64_t order_hint() const override { return table_.size(); }
    std::vector<Word> elements() const override {
        std::vector<Word> out;
        for (std::size_t i = 0; i < table_.size(); ++i) out.push_back({static_cast<int>(i)});
        return out;
    }
    Word identity() const override { return {0}; }
    Word multiply(const Word& a, const Word& b) const override { return {table_[a[0]][b[0]]}; }
    Word inverse(const Word& a) const override { return {inverses_[a[0]]}; }
    std::string describe(const Word& a) const override {
        if (static_cast<std::size_t>(a[0]) < names_.size()) return names_[a[0]];
        return "e" + std::to_string(a[0]);
    }
    std::optional<std::size_t> rank(const Word& a) const override { return static_cast<std::size_t>(a[0]); }

private:
    std::vector<std::vector<int>> table_;
    std::vector<std::string> names_;
    std::vector<int> inverses_;
};

// ---------------------------------------------------------------------------
// (n1, k1)(n2, k2) = (n1 * action[k1](n2), k1 k2)

class SemidirectBackend final : public GroupBackend {
public:
    SemidirectBackend(GroupPtr normal, GroupPtr complement, std::vector<std::vector<Elem>> action)
        : normal_(std::move(normal)), complement_(std::move(complement)), action_(std::move(action)) {
        if (action_.size() != complement_->order()) throw SpecError("semidirect: action table size");
    }

    std::string tag() const override { return "semidirect"; }
    std::uint64_t order_hint() const override { return normal_->order() * complement_->order(); }
    std::vector<Word> elements() const override {
        std::vector<Word> out;
        for (std::size_t n = 0; n < normal_->order(); ++n)
            for (std::size_t k = 0; k < complement_->order(); ++k)
                out.push_back({static_cast<int>(n), static_cast<int>(k)});
        return out;
    }
    Word identity() const override { return {0, 0}; }
    Word multiply(const Word& a, const Word& b) const override {
        const Elem n = normal_->multiply(static_cast<Elem>(a[0]), action_[a[1]][b[0]]);
        const Elem k = complement_->multiply(static_cast<Elem>(a[1]), static_cast<Elem>(b[1]));
        return {static_cast<int>(n), static_cast<int>(k)};
    }
    Word inverse(const Word& a) const override {
        const Elem kinv = complement_->inverse(static_cast<Elem>(a[1]));
        const Elem n = action_[kinv][normal_->inverse(static_cast<Elem>(a[0]))];
        return {static_cast<int>(n), static_cast<int>(kinv)};
    }
    std::string describe(const Word& a) const override {
        return "(" + normal_->describe(static_cast<Elem>(a[0])) + ", " +
               complement_->describe(static_cast<Elem>(a[1])) + ")";
    }
    std::optional<std::size_t> rank(const Word& a) const override {
        return static_cast<std::size_t>(a[0]) * complement_->order() + static_cast<std::size_t>(a[1]);
    }

private:
    GroupPtr normal_;
    GroupPtr complement_;
    std::vector<std::vector<Elem>> action_;
};

} // namespace

std::shared_ptr<const GroupBackend> make_symmetric_backend(int n) {
    return std::make_shared<SymmetricBackend>(n);
}

std::shared_ptr<const GroupBackend> make_cyclic_backend(int n) { return std::make_shared<CyclicBackend>(n); }

std::shared_ptr<const GroupBackend> make_matrix_backend(GroupSpec::Kind kind, int q) {
    return std::make_shared<MatrixBackend>(kind, q);
}

std::shared_ptr<const GroupBackend> make_cayley_backend(std::vector<std::vector<int>> table,
                                                        std::vector<std::string> names) {
    return std::make_shared<CayleyBackend>(std::move(table), std::move(names));
}

std::shared_ptr<const GroupBackend> make_quaternion8_backend() {
    // 1, -1, i, -i, j, -j, k, -k
    std::vector<std::vector<int>> table{
        {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 1, 0, 6, 7, 5, 4},
        {3, 2, 0, 1, 7, 6, 4, 5}, {4, 5, 7, 6, 1, 0, 2, 3}, {5, 4, 6, 7, 0, 1, 3, 2},
        {6, 7, 4, 5, 3, 2, 1, 0}, {7, 6, 5, 4, 2, 3, 0, 1},
    };
    return std::make_shared<CayleyBackend>(std::move(table),
                                           std::vector<std::string>{"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

std::shared_ptr<const GroupBackend> make_semidirect_backend(GroupPtr normal, GroupPtr complement,
                                                            std::vector<std::vector<Elem>> action) {
    return std::make_shared<SemidirectBackend>(std::move(normal), std::move(complement), std::move(action));
}

} // namespace gmodels
