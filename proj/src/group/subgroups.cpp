#include "gmodels/group.hpp"

#include <algorithm>
#include <unordered_map>

namespace gmodels {

bool Subgroup::contains(Elem g) const { return std::binary_search(members.begin(), members.end(), g); }

std::optional<std::size_t> Subgroup::position(Elem g) const {
    auto it = std::lower_bound(members.begin(), members.end(), g);
    if (it == members.end() || *it != g) return std::nullopt;
    return static_cast<std::size_t>(it - members.begin());
}

namespace {

std::vector<bool> closure_bits(const FiniteGroup& g, const std::vector<Elem>& gens) {
    std::vector<bool> in(g.order(), false);
    in[0] = true;
    std::vector<Elem> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (Elem s : gens) {
            const Elem y = g.multiply(queue[head], s);
            if (!in[y]) {
                in[y] = true;
                queue.push_back(y);
            }
        }
    return in;
}

std::vector<Elem> bits_to_members(const std::vector<bool>& in) {
    std::vector<Elem> out;
    for (Elem e = 0; e < in.size(); ++e)
        if (in[e]) out.push_back(e);
    return out;
}

// Walk the members in order and keep each one not yet generated.
std::vector<Elem> greedy_generators(const FiniteGroup& g, const std::vector<Elem>& members) {
    std::vector<Elem> gens;
    std::vector<bool> in(g.order(), false);
    in[0] = true;
    for (Elem e : members) {
        if (in[e]) continue;
        gens.push_back(e);
        in = closure_bits(g, gens);
    }
    return gens;
}

class SubgroupBackend final : public GroupBackend {
public:
    explicit SubgroupBackend(Subgroup h) : h_(std::move(h)) {}
    std::string tag() const override { return "subgroup"; }
    std::uint64_t order_hint() const override { return h_.order(); }
    std::vector<Word> elements() const override {
        std::vector<Word> out;
        for (Elem e : h_.members) out.push_back({static_cast<int>(e)});
        return out;
    }
    Word identity() const override { return {0}; }
    Word multiply(const Word& a, const Word& b) const override {
        return {static_cast<int>(h_.parent->multiply(static_cast<Elem>(a[0]), static_cast<Elem>(b[0])))};
    }
    Word inverse(const Word& a) const override {
        return {static_cast<int>(h_.parent->inverse(static_cast<Elem>(a[0])))};
    }
    std::string describe(const Word& a) const override { return h_.parent->describe(static_cast<Elem>(a[0])); }
    std::vector<Word> generators() const override {
        std::vector<Word> out;
        for (Elem e : h_.generators) out.push_back({static_cast<int>(e)});
        return out;
    }
    std::optional<std::size_t> rank(const Word& a) const override { return h_.position(static_cast<Elem>(a[0])); }

private:
    Subgroup h_;
};

struct BitsHash {
    std::size_t operator()(const std::vector<bool>& v) const { return std::hash<std::vector<bool>>{}(v); }
};

} // namespace

Subgroup closure(const GroupPtr& group, const std::vector<Elem>& generators) {
    Subgroup h;
    h.parent = group;
    for (Elem s : generators)
        if (s != 0 && std::find(h.generators.begin(), h.generators.end(), s) == h.generators.end())
            h.generators.push_back(s);
    h.members = bits_to_members(closure_bits(*group, h.generators));
    return h;
}

Subgroup centralizer(const GroupPtr& group, Elem g) {
    std::vector<Elem> members;
    for (Elem h = 0; h < group->order(); ++h)
        if (group->multiply(h, g) == group->multiply(g, h)) members.push_back(h);
    Subgroup c;
    c.parent = group;
    c.generators = greedy_generators(*group, members);
    c.members = std::move(members);
    return c;
}

Subgroup make_subgroup(const GroupPtr& group, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members[0] != 0) throw CheckFailure("subgroup must contain the identity");
    std::vector<bool> in(group->order(), false);
    for (Elem e : members) in[e] = true;
    for (Elem a : members) {
        if (!in[group->inverse(a)]) throw CheckFailure("subset not closed under inverses");
        for (Elem b : members)
            if (!in[group->multiply(a, b)]) throw CheckFailure("subset not closed under multiplication");
    }
    Subgroup h;
    h.parent = group;
    h.generators = greedy_generators(*group, members);
    h.members = std::move(members);
    return h;
}

Subgroup trusted_subgroup(const GroupPtr& group, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    Subgroup h;
    h.parent = group;
    h.generators = greedy_generators(*group, members);
    h.members = std::move(members);
    return h;
}

GroupPtr as_group(const Subgroup& h) {
    return FiniteGroup::create(std::make_shared<SubgroupBackend>(h), h.order());
}

Subgroup normalizer(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    std::vector<Elem> members;
    for (Elem t = 0; t < g.order(); ++t) {
        bool ok = true;
        for (Elem s : h.generators)
            if (!h.contains(g.conjugate(s, t))) { ok = false; break; }
        if (ok) members.push_back(t);
    }
    Subgroup n;
    n.parent = h.parent;
    n.generators = greedy_generators(g, members);
    n.members = std::move(members);
    return n;
}

bool are_conjugate(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return false;
    const FiniteGroup& g = *a.parent;
    for (Elem t = 0; t < g.order(); ++t) {
        bool ok = true;
        for (Elem s : a.generators)
            if (!b.contains(g.conjugate(s, t))) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& group, const SubgroupOptions& options) {
    const FiniteGroup& g = *group;
    const std::size_t n = g.order();
    if (n > options.max_order)
        throw CapExceeded("subgroup enumeration: group order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(options.max_order));

    std::unordered_map<std::vector<bool>, std::size_t, BitsHash> known; // member set -> class
    std::vector<Subgroup> discovered;
    std::vector<std::vector<Elem>> least_members;

    auto add_class = [&](Subgroup h) {
        const std::size_t id = discovered.size();
        std::vector<Elem> best = h.members;
        for (Elem t = 0; t < n; ++t) {
            std::vector<bool> bits(n, false);
            std::vector<Elem> conj;
            conj.reserve(h.order());
            for (Elem m : h.members) {
                const Elem c = g.conjugate(m, t);
                bits[c] = true;
                conj.push_back(c);
            }
            if (known.emplace(std::move(bits), id).second) {
                std::sort(conj.begin(), conj.end());
                best = std::min(best, conj);
            }
        }
        discovered.push_back(std::move(h));
        least_members.push_back(std::move(best));
    };

    add_class(closure(group, {}));
    for (std::size_t idx = 0; idx < discovered.size(); ++idx) {
        const Subgroup h = discovered[idx];
        std::vector<bool> covered(n, false);
        for (Elem m : h.members) covered[m] = true;
        for (Elem x = 0; x < n; ++x) {
            if (covered[x]) continue;
            for (Elem m : h.members) {
                covered[g.multiply(m, x)] = true;
                covered[g.multiply(x, m)] = true;
            }
            auto gens = h.generators;
            gens.push_back(x);
            auto bits = closure_bits(g, gens);
            if (known.count(bits)) continue;
            Subgroup k;
            k.parent = group;
            k.generators = std::move(gens);
            k.members = bits_to_members(bits);
            add_class(std::move(k));
        }
    }

    std::vector<Subgroup> out;
    out.reserve(discovered.size());
    for (auto& members : least_members) {
        Subgroup s;
        s.parent = group;
        s.generators = greedy_generators(g, members);
        s.members = std::move(members);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members < b.members;
    });
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Extend generator images to a map on the whole group; nullopt if the
// assignment is not consistent with a homomorphism.
template <class Value, class Compose>
std::optional<std::vector<Value>> extend_hom(const FiniteGroup& src, const std::vector<Elem>& gens,
                                             const std::vector<Value>& images, const Value& unit,
                                             Compose compose) {
    std::vector<std::optional<Value>> phi(src.order());
    phi[0] = unit;
    std::vector<Elem> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Elem x = queue[head];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const Elem y = src.multiply(x, gens[i]);
            Value target = compose(*phi[x], images[i]);
            if (!phi[y]) {
                phi[y] = std::move(target);
                queue.push_back(y);
            } else if (*phi[y] != target) {
                return std::nullopt;
            }
        }
    }
    std::vector<Value> out;
    out.reserve(phi.size());
    for (auto& v : phi) out.push_back(std::move(*v));
    return out;
}

} // namespace

std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& group) {
    const auto& gens = group.generators();
    const std::size_t n = group.order();
    std::vector<std::vector<Elem>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (Elem e = 0; e < n; ++e)
            if (group.element_order(e) == group.element_order(gens[i])) candidates[i].push_back(e);

    std::vector<std::vector<Elem>> out;
    std::vector<std::size_t> pick(gens.size(), 0);
    auto compose = [&](Elem a, Elem b) { return group.multiply(a, b); };
    while (true) {
        std::vector<Elem> images(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pick[i]];
        if (auto phi = extend_hom<Elem>(group, gens, images, Elem{0}, compose)) {
            std::vector<bool> hit(n, false);
            bool bijective = true;
            for (Elem v : *phi) {
                if (hit[v]) { bijective = false; break; }
                hit[v] = true;
            }
            if (bijective) out.push_back(std::move(*phi));
        }
        std::size_t i = gens.size();
        while (i > 0 && ++pick[i - 1] == candidates[i - 1].size()) pick[--i] = 0;
        if (i == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::vector<Elem>>> semidirect_actions(const FiniteGroup& normal,
                                                               const FiniteGroup& complement) {
    const auto auts = automorphisms(normal);
    const auto& gens = complement.generators();
    using Perm = std::vector<Elem>;
    Perm unit(normal.order());
    for (Elem e = 0; e < unit.size(); ++e) unit[e] = e;
    auto compose = [](const Perm& a, const Perm& b) {
        Perm r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
        return r;
    };

    std::vector<std::vector<Perm>> out;
    if (gens.empty()) {
        out.push_back({unit});
        return out;
    }
    std::vector<std::size_t> pick(gens.size(), 0);
    while (true) {
        std::vector<Perm> images(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) images[i] = auts[pick[i]];
        if (auto phi = extend_hom<Perm>(complement, gens, images, unit, compose)) out.push_back(std::move(*phi));
        std::size_t i = gens.size();
        while (i > 0 && ++pick[i - 1] == auts.size()) pick[--i] = 0;
        if (i == 0) break;
    }
    return out;
}

} // namespace gmodels
