#include "gmodels/group.hpp"
#include "gmodels/modelcheck.hpp"
#include "gmodels/modular.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>

namespace gmodels {

GroupSpec GroupSpec::semidirect(GroupSpec normal, GroupSpec complement, int action) {
    GroupSpec s;
    s.kind = Kind::Semidirect;
    s.n = 0;
    s.parts = {std::move(normal), std::move(complement)};
    s.action = action;
    return s;
}

void validate(const GroupSpec& spec) {
    using K = GroupSpec::Kind;
    switch (spec.kind) {
    case K::Symmetric:
    case K::Cyclic:
        if (spec.n < 1) throw SpecError("group degree must be at least 1");
        break;
    case K::GL:
    case K::SL:
    case K::PGL:
        if (spec.n != 2) throw SpecError("matrix groups are supported for n = 2 only");
        if (spec.q < 2 || !is_prime(static_cast<std::uint64_t>(spec.q))) throw SpecError("q must be prime");
        break;
    case K::Quaternion8:
    case K::G96: break;
    case K::Cayley:
        if (spec.path.empty()) throw SpecError("Cayley table path is empty");
        break;
    case K::Semidirect:
        if (spec.parts.size() != 2) throw SpecError("semidirect product needs two factors");
        if (spec.action < 0) throw SpecError("unknown action-id");
        validate(spec.parts[0]);
        validate(spec.parts[1]);
        break;
    }
}

// ---------------------------------------------------------------------------

GroupPtr FiniteGroup::create(std::shared_ptr<const GroupBackend> backend, std::size_t max_order) {
    if (backend->order_hint() > max_order)
        throw CapExceeded("group order " + std::to_string(backend->order_hint()) + " exceeds cap " +
                          std::to_string(max_order));
    std::shared_ptr<FiniteGroup> g(new FiniteGroup());
    g->backend_ = std::move(backend);
    const GroupBackend& be = *g->backend_;

    auto words = be.elements();
    std::sort(words.begin(), words.end());
    const Word id = be.identity();
    auto it = std::lower_bound(words.begin(), words.end(), id);
    if (it == words.end() || *it != id) throw CheckFailure("backend does not enumerate its identity");
    std::rotate(words.begin(), it, it + 1);
    g->words_ = std::move(words);
    const std::size_t n = g->words_.size();

    g->sorted_.resize(n);
    std::iota(g->sorted_.begin(), g->sorted_.end(), Elem{0});
    std::sort(g->sorted_.begin(), g->sorted_.end(),
              [&](Elem a, Elem b) { return g->words_[a] < g->words_[b]; });

    g->rank_lookup_ = be.rank(g->words_[0]).has_value();
    for (std::size_t i = 0; g->rank_lookup_ && i < n; ++i)
        g->rank_lookup_ = be.rank(g->words_[i]) == i;

    g->inverses_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g->inverses_[i] = g->index_of(be.inverse(g->words_[i]));

    if (n <= kCayleyTableLimit) {
        std::vector<Elem> table(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                table[a * n + b] = g->index_of(be.multiply(g->words_[a], g->words_[b]));
        g->table_ = std::move(table);
    }

    g->orders_.resize(n);
    std::uint64_t exponent = 1;
    for (Elem e = 0; e < n; ++e) {
        std::uint32_t k = 1;
        for (Elem x = e; x != 0; x = g->multiply(x, e))
            if (++k > n) throw CheckFailure("element of infinite order: multiplication is not a group law");
        g->orders_[e] = k;
        exponent = std::lcm(exponent, static_cast<std::uint64_t>(g->orders_[e]));
    }
    g->exponent_ = exponent;

    for (const auto& w : be.generators()) g->generators_.push_back(g->index_of(w));
    if (g->generators_.empty() && n > 1) {
        std::vector<bool> in(n, false);
        in[0] = true;
        for (Elem e = 0; e < n; ++e) {
            if (in[e]) continue;
            g->generators_.push_back(e);
            std::vector<Elem> queue{0};
            std::fill(in.begin(), in.end(), false);
            in[0] = true;
            for (std::size_t head = 0; head < queue.size(); ++head)
                for (Elem s : g->generators_) {
                    const Elem y = g->multiply(queue[head], s);
                    if (!in[y]) {
                        in[y] = true;
                        queue.push_back(y);
                    }
                }
        }
    }
    return g;
}

std::optional<Elem> FiniteGroup::find(const Word& w) const {
    if (rank_lookup_) {
        if (auto r = backend_->rank(w); r && *r < words_.size() && words_[*r] == w) return static_cast<Elem>(*r);
        return std::nullopt;
    }
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), w,
                               [&](Elem a, const Word& key) { return words_[a] < key; });
    if (it == sorted_.end() || words_[*it] != w) return std::nullopt;
    return *it;
}

Elem FiniteGroup::index_of(const Word& w) const {
    if (auto e = find(w)) return *e;
    throw CheckFailure("word is not an element of the group");
}

Elem FiniteGroup::power(Elem g, std::uint64_t e) const {
    Elem r = identity();
    while (e) {
        if (e & 1) r = multiply(r, g);
        g = multiply(g, g);
        e >>= 1;
    }
    return r;
}

const ConjugacyClassData& FiniteGroup::classes() const {
    std::call_once(classes_once_, [this] { classes_ = std::make_unique<ConjugacyClassData>(conjugacy_classes(*this)); });
    return *classes_;
}

// ---------------------------------------------------------------------------

ConjugacyClassData conjugacy_classes(const FiniteGroup& group) {
    const std::size_t n = group.order();
    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    ConjugacyClassData data;
    data.class_of.assign(n, kUnset);
    for (Elem e = 0; e < n; ++e) {
        if (data.class_of[e] != kUnset) continue;
        const auto id = static_cast<std::uint32_t>(data.representatives.size());
        std::vector<Elem> orbit{e};
        data.class_of[e] = id;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (Elem s : group.generators()) {
                const Elem y = group.conjugate(orbit[head], s);
                if (data.class_of[y] == kUnset) {
                    data.class_of[y] = id;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        data.representatives.push_back(e);
        data.sizes.push_back(orbit.size());
        data.element_orders.push_back(group.element_order(e));
        data.members.push_back(std::move(orbit));
    }
    data.inverse_class.resize(data.count());
    for (std::size_t c = 0; c < data.count(); ++c)
        data.inverse_class[c] = data.class_of[group.inverse(data.representatives[c])];
    return data;
}

AxiomReport verify_group_axioms(const FiniteGroup& g, std::uint64_t seed, std::size_t samples) {
    AxiomReport rep;
    const std::size_t n = g.order();
    for (Elem a = 0; a < n; ++a) {
        if (g.multiply(a, 0) != a || g.multiply(0, a) != a) {
            rep.ok = false;
            rep.failure = "identity law fails at " + g.describe(a);
            return rep;
        }
        if (g.multiply(a, g.inverse(a)) != 0 || g.multiply(g.inverse(a), a) != 0) {
            rep.ok = false;
            rep.failure = "inverse law fails at " + g.describe(a);
            return rep;
        }
    }
    auto check = [&](Elem a, Elem b, Elem c) {
        ++rep.checked_triples;
        if (g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c))) return true;
        rep.ok = false;
        rep.failure = "associativity fails at (" + g.describe(a) + ", " + g.describe(b) + ", " + g.describe(c) + ")";
        return false;
    };
    if (n <= 2000) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (!check(a, b, c)) return rep;
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
        for (std::size_t i = 0; i < samples; ++i)
            if (!check(pick(rng), pick(rng), pick(rng))) return rep;
    }
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> read_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open Cayley table file '" + path + "'");
    long long n = 0;
    if (!(in >> n) || n < 1) throw SpecError("Cayley table: bad order line");
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : table)
        for (auto& v : row)
            if (!(in >> v)) throw SpecError("Cayley table: truncated");
    return table;
}

} // namespace

GroupPtr build_group(const GroupSpec& spec, const BuildOptions& options) {
    validate(spec);
    using K = GroupSpec::Kind;
    switch (spec.kind) {
    case K::Symmetric: return FiniteGroup::create(make_symmetric_backend(spec.n), options.max_order);
    case K::Cyclic: return FiniteGroup::create(make_cyclic_backend(spec.n), options.max_order);
    case K::GL:
    case K::SL:
    case K::PGL: return FiniteGroup::create(make_matrix_backend(spec.kind, spec.q), options.max_order);
    case K::Quaternion8: return FiniteGroup::create(make_quaternion8_backend(), options.max_order);
    case K::G96: {
        if (options.max_order < 96) throw CapExceeded("group order 96 exceeds cap");
        return construct_g96();
    }
    case K::Cayley: {
        auto backend = make_cayley_backend(read_cayley_file(spec.path));
        auto g = FiniteGroup::create(std::move(backend), options.max_order);
        if (auto rep = verify_group_axioms(*g); !rep.ok) throw SpecError("Cayley table: " + rep.failure);
        return g;
    }
    case K::Semidirect: {
        auto normal = build_group(spec.parts[0], options);
        auto complement = build_group(spec.parts[1], options);
        if (normal->order() * complement->order() > options.max_order)
            throw CapExceeded("semidirect product order exceeds cap");
        auto actions = semidirect_actions(*normal, *complement);
        if (static_cast<std::size_t>(spec.action) >= actions.size())
            throw SpecError("unknown action-id " + std::to_string(spec.action) + " (" +
                            std::to_string(actions.size()) + " actions available)");
        return FiniteGroup::create(
            make_semidirect_backend(normal, complement, std::move(actions[static_cast<std::size_t>(spec.action)])),
            options.max_order);
    }
    }
    throw SpecError("unknown group kind");
}

} // namespace gmodels
