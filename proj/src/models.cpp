#include "gmodels/models.hpp"

#include "gmodels/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace gmodels {

namespace {

Residue signed_unit(const PrimeField& f, bool negative) { return negative ? f.neg(1) : 1; }

// Parity of a permutation given as images.
bool odd_permutation(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
    }
    return (perm.size() - cycles) % 2 == 1;
}

// 2x2 matrices mod q as {a, b, c, d}.
struct Mat2 {
    int q;
    int mod(long v) const { return static_cast<int>(((v % q) + q) % q); }
    Word mul(const Word& x, const Word& y) const {
        return {mod(1L * x[0] * y[0] + 1L * x[1] * y[2]), mod(1L * x[0] * y[1] + 1L * x[1] * y[3]),
                mod(1L * x[2] * y[0] + 1L * x[3] * y[2]), mod(1L * x[2] * y[1] + 1L * x[3] * y[3])};
    }
    Word transpose(const Word& x) const { return {x[0], x[2], x[1], x[3]}; }
    int det(const Word& x) const { return mod(1L * x[0] * x[3] - 1L * x[1] * x[2]); }
    int inv(int a) const {
        a = mod(a);
        for (int b = 1; b < q; ++b)
            if (mod(1L * a * b) == 1) return b;
        throw CheckFailure("no inverse mod q");
    }
    Word inverse(const Word& x) const {
        const int di = inv(det(x));
        return {mod(1L * x[3] * di), mod(-1L * x[1] * di), mod(-1L * x[2] * di), mod(1L * x[0] * di)};
    }
    // Scale so the first nonzero entry is 1.
    Word normalize(const Word& x) const {
        for (int v : x)
            if (v != 0) {
                const int s = inv(v);
                Word r(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod(1L * x[i] * s);
                return r;
            }
        return x;
    }
    Word apply(const Word& g, const Word& v) const {
        return {mod(1L * g[0] * v[0] + 1L * g[1] * v[1]), mod(1L * g[2] * v[0] + 1L * g[3] * v[1])};
    }
    bool is_square(int a) const {
        a = mod(a);
        for (int b = 1; b < q; ++b)
            if (mod(1L * b * b) == a) return true;
        return false;
    }
};

std::vector<Word> projective_lines(int q) {
    std::vector<Word> lines{{0, 1}};
    for (int t = 0; t < q; ++t) lines.push_back({1, t});
    return lines;
}

// Sign of v -> m v between two sorted line lists.
bool odd_line_map(const Mat2& m, const Word& g, const std::vector<Word>& from, const std::vector<Word>& to) {
    std::vector<int> perm;
    perm.reserve(from.size());
    for (const Word& v : from) {
        const Word image = m.normalize(m.apply(g, v));
        auto it = std::lower_bound(to.begin(), to.end(), image);
        if (it == to.end() || *it != image) throw CheckFailure("line map leaves the isotropic set");
        perm.push_back(static_cast<int>(it - to.begin()));
    }
    return odd_permutation(perm);
}

} // namespace

// ---------------------------------------------------------------------------

Involution make_involution(const Word& perm) {
    const int n = static_cast<int>(perm.size());
    Involution x;
    x.perm = perm;
    for (int i = 0; i < n; ++i) {
        if (perm[i] < 0 || perm[i] >= n || perm[perm[i]] != i) throw CheckFailure("not an involution");
        if (perm[i] > i) x.pairs.emplace_back(i, perm[i]);
    }
    x.t = static_cast<int>(x.pairs.size());
    x.f = n - 2 * x.t;
    return x;
}

int inv_count(const Involution& x, const Word& g) {
    int c = 0;
    for (auto [i, j] : x.pairs) c += g[i] > g[j];
    return c;
}

int inv_count(const Word& x, const Word& g) {
    int c = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (static_cast<std::size_t>(x[i]) > i && g[i] > g[x[i]]) ++c;
    return c;
}

GSetPtr involution_gset(int n) {
    if (n < 2 || n > 8) throw SpecError("involution model: n must lie in 2..8");
    BuildOptions opt;
    opt.max_order = std::max<std::size_t>(opt.max_order, 40320);
    GroupPtr g = build_group(GroupSpec::symmetric(n), opt);
    std::vector<Word> points;
    for (Elem e = 0; e < g->order(); ++e)
        if (g->multiply(e, e) == 0) points.push_back(g->word(e));
    return GSet::create(g, std::move(points),
                        [g](Elem e, const Word& w) { return g->word(g->conjugate(g->index_of(w), e)); });
}

GroupoidCharacter sn_sign_character(const GSetPtr& xs, const PrimeField& f) {
    auto pairs = std::make_shared<std::vector<Involution>>();
    for (Point p = 0; p < xs->size(); ++p) pairs->push_back(make_involution(xs->point(p)));
    const GroupPtr g = xs->group();
    return GroupoidCharacter{xs, f, 2, [pairs, g, f](Point x, Elem e) {
                                 return signed_unit(f, inv_count((*pairs)[x], g->word(e)) % 2 == 1);
                             }};
}

CentralizerReport centralizer_structure(const GroupoidCharacter& sigma, Point x) {
    const GroupPtr& g = sigma.gset->group();
    const PrimeField& f = sigma.field;
    const Involution inv = make_involution(sigma.gset->point(x));
    const int n = static_cast<int>(inv.perm.size());
    CentralizerReport rep;
    rep.t = inv.t;
    rep.f = inv.f;
    const Subgroup c = centralizer(g, g->index_of(inv.perm));
    rep.order = c.order();
    std::size_t expected = std::size_t{1} << inv.t;
    for (int k = 2; k <= inv.t; ++k) expected *= static_cast<std::size_t>(k);
    for (int k = 2; k <= inv.f; ++k) expected *= static_cast<std::size_t>(k);
    rep.expected_order = expected;

    auto perm_of = [&](const std::vector<std::pair<int, int>>& swaps) {
        Word w(n);
        std::iota(w.begin(), w.end(), 0);
        for (auto [a, b] : swaps) std::swap(w[a], w[b]);
        return g->index_of(w);
    };
    std::vector<Elem> swaps, flips, fixed;
    for (int k = 0; k + 1 < inv.t; ++k)
        swaps.push_back(perm_of({{inv.pairs[k].first, inv.pairs[k + 1].first},
                                 {inv.pairs[k].second, inv.pairs[k + 1].second}}));
    for (int k = 0; k < inv.t; ++k) flips.push_back(perm_of({inv.pairs[k]}));
    std::vector<int> fixed_points;
    for (int i = 0; i < n; ++i)
        if (inv.perm[i] == i) fixed_points.push_back(i);
    for (std::size_t k = 0; k + 1 < fixed_points.size(); ++k)
        fixed.push_back(perm_of({{fixed_points[k], fixed_points[k + 1]}}));

    std::vector<Elem> all = swaps;
    all.insert(all.end(), flips.begin(), flips.end());
    all.insert(all.end(), fixed.begin(), fixed.end());
    rep.generated_equal = closure(g, all).members == c.members;

    auto all_equal = [&](const std::vector<Elem>& gens, Residue v) {
        return std::all_of(gens.begin(), gens.end(), [&](Elem e) { return sigma.value(x, e) == v; });
    };
    rep.pair_swaps_trivial = all_equal(swaps, 1);
    rep.flips_negative = all_equal(flips, f.neg(1));
    rep.fixed_part_trivial = all_equal(fixed, 1);

    IsotropyCharacter::Orbit restricted{x, c, {}};
    for (Elem h : c.members) restricted.values.push_back(sigma.value(x, h));
    rep.multiplicative = is_multiplicative(restricted, f);
    return rep;
}

// ---------------------------------------------------------------------------

GSetPtr pgl2_symmetric_gset(int q) {
    if (q % 2 == 0 || !is_prime(static_cast<std::uint64_t>(q))) throw SpecError("q must be an odd prime");
    GroupPtr g = build_group(GroupSpec::pgl(q));
    const Mat2 m{q};
    std::vector<Word> points;
    for (Elem e = 0; e < g->order(); ++e) {
        const Word& w = g->word(e);
        const bool symmetric = w[1] == w[2];
        const bool alternating = w[0] == 0 && w[3] == 0 && w[2] == m.mod(-w[1]);
        if (symmetric || alternating) points.push_back(w);
    }
    return GSet::create(g, std::move(points), [g, m](Elem e, const Word& form) {
        const Word& a = g->word(e);
        return m.normalize(m.mul(m.mul(a, form), m.transpose(a)));
    });
}

std::vector<Word> isotropic_lines(const Word& form, int q) {
    const Mat2 m{q};
    std::vector<Word> out;
    for (const Word& v : projective_lines(q)) {
        const long value = 1L * form[0] * v[0] * v[0] + 1L * (form[1] + form[2]) * v[0] * v[1] + 1L * form[3] * v[1] * v[1];
        if (m.mod(value) == 0) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// q from |PGL(2,q)| = q^3 - q.
int pgl_field_size(const FiniteGroup& g) {
    for (int q = 2; q < 1024; ++q)
        if (static_cast<std::size_t>(q) * (q * q - 1) == g.order()) return q;
    throw CheckFailure("not the order of PGL(2,q)");
}

// q from |GL(2,q)| = (q^2 - 1)(q^2 - q).
int gl_field_size(const FiniteGroup& g) {
    for (int q = 2; q < 1024; ++q)
        if (static_cast<std::size_t>(q * q - 1) * (q * q - q) == g.order()) return q;
    throw CheckFailure("not the order of GL(2,q)");
}

} // namespace

IsotropyCharacter pgl2_epsilon(const GSetPtr& xs, const PrimeField& f) {
    const int q = pgl_field_size(*xs->group());
    const Mat2 m{q};
    const GroupPtr& g = xs->group();
    IsotropyCharacter eps{xs, f, {}};
    for (std::size_t i = 0; i < xs->orbits().size(); ++i) {
        IsotropyCharacter::Orbit o{xs->representative(i), xs->stabilizer(i), {}};
        const auto lines = isotropic_lines(xs->point(o.representative), q);
        for (Elem h : o.stabilizer.members) {
            const Word inv_t = m.transpose(m.inverse(g->word(h)));
            o.values.push_back(signed_unit(f, odd_line_map(m, inv_t, lines, lines)));
        }
        eps.orbits.push_back(std::move(o));
    }
    return eps;
}

GroupoidCharacter pgl2_epsilon_groupoid(const GSetPtr& xs, const PrimeField& f) {
    const int q = pgl_field_size(*xs->group());
    auto lines = std::make_shared<std::vector<std::vector<Word>>>();
    for (Point p = 0; p < xs->size(); ++p) lines->push_back(isotropic_lines(xs->point(p), q));
    const Mat2 m{q};
    return GroupoidCharacter{xs, f, 2, [xs, lines, m, f](Point x, Elem e) {
                                 const Word inv_t = m.transpose(m.inverse(xs->group()->word(e)));
                                 const Point y = xs->act(e, x);
                                 return signed_unit(f, odd_line_map(m, inv_t, (*lines)[x], (*lines)[y]));
                             }};
}

bool PglEpsilonReport::ok() const {
    const std::size_t qq = static_cast<std::size_t>(q);
    const std::size_t order = qq * (qq * qq - 1);
    return orbit_sizes.size() == 3 && stabilizer_orders == std::vector<std::size_t>{2 * (qq - 1), 2 * (qq + 1), order} &&
           isotropic_counts == std::vector<std::size_t>{2, 0, qq + 1} && multiplicative && eps1_order_two &&
           eps1_kernel_split_torus && h1_normalizes_t1 && eps2_trivial && h2_normalizes_t2 && eps3_det_mod_squares &&
           eps3_line_sign;
}

PglEpsilonReport verify_pgl2_epsilon(const IsotropyCharacter& eps, int q) {
    PglEpsilonReport rep;
    rep.q = q;
    const GSet& xs = *eps.gset;
    const GroupPtr& g = xs.group();
    const PrimeField& f = eps.field;
    const Mat2 m{q};
    const Residue minus = f.neg(1);

    const IsotropyCharacter::Orbit* by_kind[3] = {nullptr, nullptr, nullptr};
    rep.multiplicative = true;
    for (const auto& o : eps.orbits) {
        const std::size_t lines = isotropic_lines(xs.point(o.representative), q).size();
        const int kind = lines == 2 ? 0 : lines == 0 ? 1 : lines == static_cast<std::size_t>(q) + 1 ? 2 : -1;
        if (kind < 0 || by_kind[kind]) return rep;
        by_kind[kind] = &o;
        if (!is_multiplicative(o, f)) rep.multiplicative = false;
    }
    if (eps.orbits.size() != 3 || !by_kind[0] || !by_kind[1] || !by_kind[2]) return rep;
    for (const auto* o : by_kind) {
        rep.orbit_sizes.push_back(xs.orbits()[xs.orbit_of(o->representative)].size());
        rep.stabilizer_orders.push_back(o->stabilizer.order());
        rep.isotropic_counts.push_back(isotropic_lines(xs.point(o->representative), q).size());
    }

    auto has_element_of_order = [&](const std::vector<Elem>& members, std::uint32_t k) -> std::optional<Elem> {
        for (Elem e : members)
            if (g->element_order(e) == k) return e;
        return std::nullopt;
    };

    // H_1: order-two character whose kernel is the split torus fixing both isotropic lines.
    {
        const auto& o = *by_kind[0];
        bool pm = true, has_minus = false;
        std::vector<Elem> kernel;
        for (std::size_t i = 0; i < o.values.size(); ++i) {
            if (o.values[i] == minus) has_minus = true;
            else if (o.values[i] == 1) kernel.push_back(o.stabilizer.members[i]);
            else pm = false;
        }
        rep.eps1_order_two = pm && has_minus;
        const auto lines = isotropic_lines(xs.point(o.representative), q);
        bool fixes_lines = true;
        for (Elem k : kernel) {
            const Word inv_t = m.transpose(m.inverse(g->word(k)));
            for (const Word& v : lines)
                if (m.normalize(m.apply(inv_t, v)) != v) fixes_lines = false;
        }
        const bool cyclic = has_element_of_order(kernel, static_cast<std::uint32_t>(q - 1)).has_value();
        rep.eps1_kernel_split_torus = kernel.size() == static_cast<std::size_t>(q - 1) && cyclic && fixes_lines;
        if (!kernel.empty()) rep.h1_normalizes_t1 = normalizer(trusted_subgroup(g, kernel)).members == o.stabilizer.members;
    }
    // H_2: trivial character; H_2 normalizes a cyclic torus of order q+1.
    {
        const auto& o = *by_kind[1];
        rep.eps2_trivial = std::all_of(o.values.begin(), o.values.end(), [](Residue v) { return v == 1; });
        if (auto t = has_element_of_order(o.stabilizer.members, static_cast<std::uint32_t>(q + 1)))
            rep.h2_normalizes_t2 = normalizer(closure(g, {*t})).members == o.stabilizer.members;
    }
    // H_3 = G: determinant mod squares, and the sign on all q+1 lines.
    {
        const auto& o = *by_kind[2];
        const auto all_lines = [&] {
            auto l = projective_lines(q);
            std::sort(l.begin(), l.end());
            return l;
        }();
        rep.eps3_det_mod_squares = rep.eps3_line_sign = o.stabilizer.order() == g->order();
        for (std::size_t i = 0; i < o.values.size(); ++i) {
            const Word& w = g->word(o.stabilizer.members[i]);
            if (o.values[i] != signed_unit(f, !m.is_square(m.det(w)))) rep.eps3_det_mod_squares = false;
            if (o.values[i] != signed_unit(f, odd_line_map(m, w, all_lines, all_lines))) rep.eps3_line_sign = false;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

GSetPtr gg_gset(int q) {
    GroupPtr g = build_group(GroupSpec::gl(q));
    std::vector<Word> points;
    for (int u1 = 0; u1 < q; ++u1)
        for (int u2 = 0; u2 < q; ++u2)
            for (int w = 1; w < q; ++w)
                if (u1 || u2) points.push_back({u1, u2, w});
    const Mat2 m{q};
    return GSet::create(g, std::move(points), [g, m](Elem e, const Word& x) {
        const Word& a = g->word(e);
        const Word u = m.apply(a, {x[0], x[1]});
        return Word{u[0], u[1], m.mod(1L * m.det(a) * x[2])};
    });
}

std::pair<int, int> companion(int u1, int u2, int w, int q, CompanionRule rule) {
    const Mat2 m{q};
    std::optional<std::pair<int, int>> found;
    for (int v1 = 0; v1 < q; ++v1)
        for (int v2 = 0; v2 < q; ++v2)
            if (m.mod(1L * u1 * v2 - 1L * u2 * v1) == m.mod(w)) {
                if (rule == CompanionRule::LexMin) return {v1, v2};
                found = {v1, v2};
            }
    if (!found) throw CheckFailure("no companion vector: u is zero");
    return *found;
}

GroupoidCharacter gg_character(const GSetPtr& xs, const PrimeField& f, CompanionRule rule) {
    const GroupPtr& g = xs->group();
    const int field = gl_field_size(*g);
    const Mat2 m{field};
    if ((f.prime() - 1) % static_cast<std::uint32_t>(field) != 0)
        throw CheckFailure("gg_character: prime has no primitive q-th root of unity");
    const Residue zeta = f.root_of_unity(static_cast<std::uint32_t>(field));
    auto companions = std::make_shared<std::vector<Word>>();
    for (Point p = 0; p < xs->size(); ++p) {
        const Word& x = xs->point(p);
        auto [v1, v2] = companion(x[0], x[1], x[2], field, rule);
        companions->push_back({v1, v2});
    }
    return GroupoidCharacter{xs, f, static_cast<std::uint32_t>(field), [xs, companions, m, f, zeta](Point x, Elem e) {
                                 const Point y = xs->act(e, x);
                                 const Word& u = xs->point(y);
                                 const Word gv = m.apply(xs->group()->word(e), (*companions)[x]);
                                 const int d1 = m.mod(gv[0] - (*companions)[y][0]);
                                 const int d2 = m.mod(gv[1] - (*companions)[y][1]);
                                 const int b = u[0] != 0 ? m.mod(1L * d1 * m.inv(u[0])) : m.mod(1L * d2 * m.inv(u[1]));
                                 return f.pow(zeta, static_cast<std::uint64_t>(b));
                             }};
}

Subgroup unipotent_subgroup(const GroupPtr& gl2) { return closure(gl2, {gl2->index_of({1, 1, 0, 1})}); }

ClassFunction classical_gg_character(const GroupPtr& gl2, const PrimeField& f) {
    const Subgroup u = unipotent_subgroup(gl2);
    const auto q = static_cast<std::uint32_t>(u.order());
    const Residue zeta = f.root_of_unity(q);
    const GroupPtr ug = as_group(u);
    const auto& cls = ug->classes();
    std::vector<Residue> theta(cls.count());
    for (std::size_t c = 0; c < cls.count(); ++c) {
        const Word& w = gl2->word(u.members[cls.representatives[c]]);
        theta[c] = f.pow(zeta, static_cast<std::uint64_t>(w[1]));
    }
    return induce(u, ClassFunction::modular(ug, f, std::move(theta)));
}

// ---------------------------------------------------------------------------

S3CohomologyModel s3_cohomology_model(const PrimeField& f) {
    S3CohomologyModel model;
    GroupPtr g = build_group(GroupSpec::symmetric(3));
    model.group = g;
    auto point = GSet::create(g, {Word{}}, [](Elem, const Word&) { return Word{}; });
    auto vertices = GSet::create(g, {{0}, {1}, {2}}, [g](Elem e, const Word& v) { return Word{g->word(e)[v[0]]}; });
    std::vector<Word> edge_words;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) edge_words.push_back({a, b});
    auto edges = GSet::create(g, edge_words, [g](Elem e, const Word& v) {
        const Word& p = g->word(e);
        return Word{p[v[0]], p[v[1]]};
    });
    auto perm_char = [&](const GSetPtr& x) {
        return lift_exact(geometric_induction(trivial_groupoid_character(x, f)), static_cast<std::int64_t>(x->size()));
    };
    model.chi_point = perm_char(point);
    model.chi_vertices = perm_char(vertices);
    model.chi_edges = perm_char(edges);

    // delta_{-1}: constants on vertices; delta_0: (x, y) -> f(y) - f(x).
    IntMatrix dm1(3, 1);
    for (std::size_t v = 0; v < 3; ++v) dm1(v, 0) = 1;
    IntMatrix d0(edges->size(), 3);
    for (Point e = 0; e < edges->size(); ++e) {
        const Word& xy = edges->point(e);
        d0(e, static_cast<std::size_t>(xy[1])) += 1;
        d0(e, static_cast<std::size_t>(xy[0])) -= 1;
    }
    model.rank_delta_minus1 = integer_rank(dm1);
    model.rank_delta0 = integer_rank(d0);
    model.composite_zero = true;
    for (std::size_t e = 0; e < d0.rows(); ++e) {
        BigInt s = 0;
        for (std::size_t v = 0; v < 3; ++v) s += d0(e, v) * dm1(v, 0);
        if (s != 0) model.composite_zero = false;
    }
    model.exact_at_c0 = model.composite_zero && 3 - model.rank_delta0 == model.rank_delta_minus1;
    model.equivariant = true;
    for (Elem e = 0; e < g->order(); ++e)
        for (Point ed = 0; ed < edges->size(); ++ed)
            for (Point v = 0; v < 3; ++v)
                if (d0(edges->act(e, ed), vertices->act(e, v)) != d0(ed, v)) model.equivariant = false;
    model.dim_h1 = static_cast<std::int64_t>(edges->size() - model.rank_delta0);
    model.chi_h1 = model.chi_edges - model.chi_vertices + model.chi_point;
    return model;
}

} // namespace gmodels
