#include "gmodels/chartable.hpp"

#include "gmodels/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gmodels {

ClassFunction ClassFunction::modular(GroupPtr g, const PrimeField& f, std::vector<Residue> values) {
    ClassFunction c;
    c.group = std::move(g);
    c.prime = f.prime();
    c.residues = std::move(values);
    return c;
}

ClassFunction ClassFunction::exact(GroupPtr g, std::vector<std::int64_t> values) {
    ClassFunction c;
    c.group = std::move(g);
    c.integers = std::move(values);
    return c;
}

ClassFunction to_modular(const ClassFunction& chi, const PrimeField& f) {
    if (!chi.is_exact()) {
        if (chi.prime != f.prime()) throw CheckFailure("to_modular: prime mismatch");
        return chi;
    }
    std::vector<Residue> r(chi.size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.reduce(chi.integers[j]);
    return ClassFunction::modular(chi.group, f, std::move(r));
}

ClassFunction lift_exact(const ClassFunction& chi, std::int64_t bound) {
    if (chi.is_exact()) return chi;
    const PrimeField f = chi.field();
    std::vector<std::int64_t> v(chi.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = f.lift(chi.residues[j]);
        if (std::llabs(v[j]) > bound)
            throw CheckFailure("lift: value outside the provable range (prime too small?)");
    }
    return ClassFunction::exact(chi.group, std::move(v));
}

ClassFunction trivial_character(const GroupPtr& g, const PrimeField& f) {
    return ClassFunction::modular(g, f, std::vector<Residue>(g->classes().count(), 1));
}

ClassFunction regular_character(const GroupPtr& g, const PrimeField& f) {
    std::vector<Residue> v(g->classes().count(), 0);
    v[0] = f.reduce(static_cast<std::int64_t>(g->order()));
    return ClassFunction::modular(g, f, std::move(v));
}

namespace {

void require_compatible(const ClassFunction& a, const ClassFunction& b) {
    if (a.group != b.group) throw CheckFailure("class functions on different groups");
    if (a.prime != b.prime) throw CheckFailure("class functions over different primes");
}

} // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    require_compatible(a, b);
    ClassFunction r = a;
    if (a.is_exact()) {
        for (std::size_t j = 0; j < r.size(); ++j) r.integers[j] += b.integers[j];
    } else {
        const PrimeField f = a.field();
        for (std::size_t j = 0; j < r.size(); ++j) r.residues[j] = f.add(a.residues[j], b.residues[j]);
    }
    return r;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    require_compatible(a, b);
    ClassFunction r = a;
    if (a.is_exact()) {
        for (std::size_t j = 0; j < r.size(); ++j) r.integers[j] -= b.integers[j];
    } else {
        const PrimeField f = a.field();
        for (std::size_t j = 0; j < r.size(); ++j) r.residues[j] = f.sub(a.residues[j], b.residues[j]);
    }
    return r;
}

bool same_values(const ClassFunction& a, const ClassFunction& b) {
    if (a.group != b.group || a.size() != b.size()) return false;
    if (a.is_exact() && b.is_exact()) return a.integers == b.integers;
    const PrimeField f(a.is_exact() ? b.prime : a.prime);
    if (!a.is_exact() && !b.is_exact() && a.prime != b.prime) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a.value_mod(f, j) != b.value_mod(f, j)) return false;
    return true;
}

// ---------------------------------------------------------------------------

std::uint32_t next_admissible_prime(const FiniteGroup& g, std::uint32_t aux, std::uint32_t p) {
    const std::uint64_t step = std::lcm(g.exponent(), static_cast<std::uint64_t>(aux));
    const std::uint64_t floor = std::max<std::uint64_t>(p, 2 * g.order());
    std::uint64_t candidate = floor - floor % step + 1;
    if (candidate <= floor) candidate += step;
    while (!is_prime(candidate)) candidate += step;
    if (candidate >= (1ull << 31)) throw CapExceeded("no admissible prime below 2^31");
    return static_cast<std::uint32_t>(candidate);
}

std::uint32_t choose_prime(const FiniteGroup& g, std::uint32_t aux) {
    if (aux == 0) throw std::invalid_argument("choose_prime: aux root order must be positive");
    return next_admissible_prime(g, aux, 0);
}

ClassTensor class_tensor(const FiniteGroup& g) {
    const auto& cls = g.classes();
    const std::size_t k = cls.count();
    ClassTensor a(k);
    for (std::size_t l = 0; l < k; ++l) {
        const Elem z = cls.representatives[l];
        for (Elem x = 0; x < g.order(); ++x) {
            const Elem y = g.multiply(g.inverse(x), z);
            ++a(cls.class_of[x], cls.class_of[y], l);
        }
    }
    return a;
}

namespace {

std::vector<std::size_t> pivot_columns(const ModMatrix& m) {
    std::vector<std::size_t> piv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t c = 0;
        while (c < m.cols() && m(r, c) == 0) ++c;
        piv.push_back(c);
    }
    return piv;
}

// Split a common eigenspace (rows = basis in RREF) under the class matrix A.
// Returns false if the restriction is not diagonalizable over F_p.
bool split_space(const PrimeField& f, const ModMatrix& a, const ModMatrix& space, std::vector<ModMatrix>& out) {
    const std::size_t d = space.rows();
    const std::size_t k = space.cols();
    const auto piv = pivot_columns(space);
    ModMatrix b(d, d);
    std::vector<Residue> image(k);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t i = 0; i < k; ++i) image[i] = kernels::dot_mod(a.row(i), space.row(r), f.prime());
        for (std::size_t c = 0; c < d; ++c) b(c, r) = image[piv[c]];
    }
    const auto poly = characteristic_polynomial(f, b);
    std::size_t total = 0;
    for (Residue lambda : roots(f, poly)) {
        ModMatrix shifted = b;
        for (std::size_t i = 0; i < d; ++i) shifted(i, i) = f.sub(shifted(i, i), lambda);
        const ModMatrix coords = nullspace(f, shifted);
        ModMatrix e(coords.rows(), k);
        for (std::size_t v = 0; v < coords.rows(); ++v)
            for (std::size_t r = 0; r < d; ++r)
                if (Residue c = coords(v, r)) kernels::axpy_mod(e.row(v), space.row(r), c, f.prime());
        rref(f, e);
        total += e.rows();
        out.push_back(std::move(e));
    }
    return total == d;
}

} // namespace

std::optional<CharacterTable> try_character_table(const GroupPtr& gp, std::uint32_t prime, std::uint32_t aux) {
    const FiniteGroup& g = *gp;
    const auto& cls = g.classes();
    const std::size_t k = cls.count();
    const PrimeField f(prime);
    const ClassTensor tensor = class_tensor(g);

    std::vector<ModMatrix> spaces{ModMatrix::identity(k)};
    auto all_split = [&] {
        return std::all_of(spaces.begin(), spaces.end(), [](const ModMatrix& s) { return s.rows() == 1; });
    };
    for (std::size_t j = 1; j < k && !all_split(); ++j) {
        ModMatrix a(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l) a(i, l) = f.reduce(static_cast<std::int64_t>(tensor(i, j, l) % prime));
        std::vector<ModMatrix> next;
        for (const auto& s : spaces) {
            if (s.rows() == 1) {
                next.push_back(s);
                continue;
            }
            if (!split_space(f, a, s, next)) return std::nullopt;
        }
        spaces = std::move(next);
    }
    if (!all_split() || spaces.size() != k) return std::nullopt;

    const std::int64_t order = static_cast<std::int64_t>(g.order());
    const auto max_degree = static_cast<std::int64_t>(std::sqrt(static_cast<double>(order)) + 1e-9);
    struct Row {
        std::int64_t degree;
        std::vector<Residue> values;
    };
    std::vector<Row> rows;
    for (const auto& s : spaces) {
        std::vector<Residue> w(s.row(0).begin(), s.row(0).end());
        if (w[0] == 0) return std::nullopt;
        const Residue scale = f.inv(w[0]);
        for (auto& x : w) x = f.mul(x, scale);

        Residue sum = 0;
        for (std::size_t j = 0; j < k; ++j)
            sum = f.add(sum, f.div(f.mul(w[j], w[cls.inverse_class[j]]), f.reduce(static_cast<std::int64_t>(cls.sizes[j]))));
        if (sum == 0) return std::nullopt;
        const Residue d2 = f.div(f.reduce(order), sum);
        std::int64_t degree = 0;
        for (std::int64_t d = 1; d <= max_degree; ++d)
            if (f.reduce(d * d) == d2) { degree = d; break; }
        if (degree == 0) return std::nullopt;

        Row row{degree, std::vector<Residue>(k)};
        for (std::size_t j = 0; j < k; ++j)
            row.values[j] = f.div(f.mul(f.reduce(degree), w[j]), f.reduce(static_cast<std::int64_t>(cls.sizes[j])));
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.values < b.values;
    });

    CharacterTable t{gp, f, aux, {}, ModMatrix(k, k)};
    for (std::size_t i = 0; i < k; ++i) {
        t.degrees.push_back(rows[i].degree);
        std::copy(rows[i].values.begin(), rows[i].values.end(), t.values.row(i).begin());
    }
    if (!check_orthogonality(t).ok()) return std::nullopt;
    return t;
}

CharacterTable character_table(const GroupPtr& g, const TableOptions& options) {
    std::uint32_t p = options.prime ? *options.prime : choose_prime(*g, options.aux_root_order);
    for (int attempt = 0; attempt < options.max_prime_attempts; ++attempt) {
        if (auto t = try_character_table(g, p, options.aux_root_order)) return std::move(*t);
        p = next_admissible_prime(*g, options.aux_root_order, p);
    }
    throw CheckFailure("character table: eigenspace splitting failed for every tried prime");
}

ClassFunction CharacterTable::character(std::size_t i) const {
    auto r = values.row(i);
    return ClassFunction::modular(group, field, std::vector<Residue>(r.begin(), r.end()));
}

OrthogonalityReport check_orthogonality(const CharacterTable& t) {
    OrthogonalityReport rep;
    const PrimeField& f = t.field;
    const auto& cls = t.group->classes();
    const std::size_t k = t.size();
    const std::int64_t order = static_cast<std::int64_t>(t.group->order());

    std::int64_t sum_sq = 0;
    for (auto d : t.degrees) {
        sum_sq += d * d;
        if (d <= 0 || order % d != 0) rep.degrees_ok = false;
    }
    if (sum_sq != order) rep.degrees_ok = false;
    for (std::size_t i = 0; i < k; ++i)
        if (t.values(i, 0) != f.reduce(t.degrees[i])) rep.degrees_ok = false;
    for (std::size_t j = 0; j < k; ++j)
        if (t.values(0, j) != 1) rep.degrees_ok = false;
    if (!rep.degrees_ok) rep.failure = "degree invariants";

    for (std::size_t i = 0; i < k && rep.rows_ok; ++i)
        for (std::size_t i2 = 0; i2 < k; ++i2) {
            const std::int64_t ip = inner_product(t.character(i), t.character(i2));
            if (ip != (i == i2 ? 1 : 0)) {
                rep.rows_ok = false;
                rep.failure = "row orthogonality";
                break;
            }
        }
    for (std::size_t j = 0; j < k && rep.columns_ok; ++j)
        for (std::size_t l = 0; l < k; ++l) {
            Residue s = 0;
            const std::size_t linv = cls.inverse_class[l];
            for (std::size_t i = 0; i < k; ++i) s = f.add(s, f.mul(t.values(i, j), t.values(i, linv)));
            const Residue expect = j == l ? f.reduce(order / static_cast<std::int64_t>(cls.sizes[j])) : 0;
            if (s != expect) {
                rep.columns_ok = false;
                rep.failure = "column orthogonality";
                break;
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------

std::int64_t inner_product(const ClassFunction& chi, const ClassFunction& psi) {
    if (chi.group != psi.group) throw CheckFailure("inner_product: different groups");
    const auto& cls = chi.group->classes();
    const std::size_t k = cls.count();
    if (chi.size() != k || psi.size() != k) throw CheckFailure("inner_product: length mismatch");
    const auto order = static_cast<std::int64_t>(chi.group->order());

    if (chi.is_exact() && psi.is_exact()) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < k; ++j)
            s += static_cast<std::int64_t>(cls.sizes[j]) * chi.integers[j] * psi.integers[cls.inverse_class[j]];
        if (s % order != 0) throw CheckFailure("inner_product: not an integer");
        return s / order;
    }
    if (!chi.is_exact() && !psi.is_exact() && chi.prime != psi.prime)
        throw CheckFailure("inner_product: prime mismatch");
    const PrimeField f(chi.is_exact() ? psi.prime : chi.prime);
    std::vector<Residue> a(k), b(k);
    for (std::size_t j = 0; j < k; ++j) {
        a[j] = f.mul(f.reduce(static_cast<std::int64_t>(cls.sizes[j])), chi.value_mod(f, j));
        b[j] = psi.value_mod(f, cls.inverse_class[j]);
    }
    return f.lift(f.div(kernels::dot_mod(a, b, f.prime()), f.reduce(order)));
}

ClassFunction induce(const Subgroup& h, const ClassFunction& theta) {
    const FiniteGroup& g = *h.parent;
    if (!theta.group || theta.group->order() != h.order())
        throw CheckFailure("induce: class function is not defined on the subgroup");
    const auto& gcls = g.classes();
    const auto& hcls = theta.group->classes();
    const std::size_t k = gcls.count();
    const auto horder = static_cast<std::int64_t>(h.order());

    if (theta.is_exact()) {
        std::vector<std::int64_t> sums(k, 0);
        for (std::size_t i = 0; i < h.order(); ++i)
            sums[gcls.class_of[h.members[i]]] += theta.integers[hcls.class_of[i]];
        for (std::size_t j = 0; j < k; ++j) {
            const std::int64_t num = sums[j] * static_cast<std::int64_t>(g.order() / gcls.sizes[j]);
            if (num % horder != 0) throw CheckFailure("induce: non-integral value");
            sums[j] = num / horder;
        }
        return ClassFunction::exact(h.parent, std::move(sums));
    }
    const PrimeField f = theta.field();
    std::vector<Residue> sums(k, 0);
    for (std::size_t i = 0; i < h.order(); ++i) {
        auto& s = sums[gcls.class_of[h.members[i]]];
        s = f.add(s, theta.residues[hcls.class_of[i]]);
    }
    const Residue inv_h = f.inv(f.reduce(horder));
    for (std::size_t j = 0; j < k; ++j)
        sums[j] = f.mul(f.mul(sums[j], f.reduce(static_cast<std::int64_t>(g.order() / gcls.sizes[j]))), inv_h);
    return ClassFunction::modular(h.parent, f, std::move(sums));
}

ClassFunction restrict_to(const Subgroup& h, const GroupPtr& h_group, const ClassFunction& chi) {
    if (chi.group != h.parent) throw CheckFailure("restrict: class function is not on the parent group");
    if (h_group->order() != h.order()) throw CheckFailure("restrict: subgroup group mismatch");
    const auto& gcls = h.parent->classes();
    const auto& hcls = h_group->classes();
    ClassFunction out;
    out.group = h_group;
    out.prime = chi.prime;
    for (std::size_t c = 0; c < hcls.count(); ++c) {
        const std::size_t gc = gcls.class_of[h.members[hcls.representatives[c]]];
        if (chi.is_exact()) out.integers.push_back(chi.integers[gc]);
        else out.residues.push_back(chi.residues[gc]);
    }
    return out;
}

std::vector<std::int64_t> multiplicities(const ClassFunction& chi, const CharacterTable& t) {
    if (chi.group != t.group) throw CheckFailure("multiplicities: different groups");
    const ClassFunction c = to_modular(chi, t.field);
    std::vector<std::int64_t> m(t.size());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        m[i] = inner_product(c, t.character(i));
        if (m[i] < 0) throw CheckFailure("multiplicities: negative multiplicity (not a character)");
        total += m[i] * t.degrees[i];
    }
    if (t.field.reduce(total) != c.residues[0])
        throw CheckFailure("multiplicities: degree mismatch (not a character)");
    return m;
}

ClassFunction gelfand_character(const CharacterTable& t) {
    const PrimeField& f = t.field;
    std::vector<Residue> sum(t.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) sum[j] = f.add(sum[j], t.values(i, j));
    const auto bound = std::accumulate(t.degrees.begin(), t.degrees.end(), std::int64_t{0});
    return lift_exact(ClassFunction::modular(t.group, f, std::move(sum)), bound);
}

} // namespace gmodels
