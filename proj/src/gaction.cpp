#include "gmodels/gaction.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace gmodels {

namespace {

constexpr std::size_t kActionTableLimit = std::size_t{1} << 22;
constexpr std::size_t kValueTableLimit = std::size_t{1} << 24;

} // namespace

GSetPtr GSet::create(GroupPtr group, std::vector<Word> points, WordAction act) {
    std::shared_ptr<GSet> x(new GSet());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    x->group_ = std::move(group);
    x->points_ = std::move(points);
    x->act_ = std::move(act);
    const FiniteGroup& g = *x->group_;
    const std::size_t n = x->size();

    auto image = [&](Elem e, Point p) -> Point {
        auto q = x->find(x->act_(e, x->points_[p]));
        if (!q) throw CheckFailure("G-set: action leaves the point set");
        return *q;
    };
    if (g.order() * n <= kActionTableLimit) {
        std::vector<Point> table(g.order() * n);
        for (Elem e = 0; e < g.order(); ++e)
            for (Point p = 0; p < n; ++p) table[static_cast<std::size_t>(e) * n + p] = image(e, p);
        x->table_ = std::move(table);
    }

    // Orbits by breadth-first search over the generators.
    constexpr std::uint32_t kUnseen = ~0u;
    x->orbit_of_.assign(n, kUnseen);
    x->transversal_.assign(n, 0);
    for (Point start = 0; start < n; ++start) {
        if (x->orbit_of_[start] != kUnseen) continue;
        const auto id = static_cast<std::uint32_t>(x->orbits_.size());
        std::vector<Point> orbit{start};
        x->orbit_of_[start] = id;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            const Point p = orbit[i];
            for (Elem s : g.generators()) {
                const Point q = x->table_.empty() ? image(s, p) : x->act(s, p);
                if (x->orbit_of_[q] != kUnseen) continue;
                x->orbit_of_[q] = id;
                x->transversal_[q] = g.multiply(s, x->transversal_[p]);
                orbit.push_back(q);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        x->orbits_.push_back(std::move(orbit));
    }
    for (const auto& orbit : x->orbits_) {
        const Point rep = orbit[0];
        std::vector<Elem> members;
        for (Elem e = 0; e < g.order(); ++e)
            if (x->act(e, rep) == rep) members.push_back(e);
        x->stabilizers_.push_back(trusted_subgroup(x->group_, std::move(members)));
    }
    return x;
}

std::optional<Point> GSet::find(const Word& w) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), w);
    if (it == points_.end() || *it != w) return std::nullopt;
    return static_cast<Point>(it - points_.begin());
}

ActionReport verify_action(const GSet& x, std::uint64_t seed, std::size_t samples) {
    ActionReport rep;
    const FiniteGroup& g = *x.group();
    for (Point p = 0; p < x.size(); ++p)
        if (x.act(0, p) != p) {
            rep.ok = false;
            rep.failure = "identity moves point " + std::to_string(p);
            return rep;
        }
    auto check = [&](Elem e, Point p) {
        for (Elem s : g.generators()) {
            ++rep.checked;
            if (x.act(e, x.act(s, p)) != x.act(g.multiply(e, s), p)) {
                rep.ok = false;
                rep.failure = "g.(s.x) != (gs).x at g=" + g.describe(e) + " s=" + g.describe(s) +
                              " x=" + std::to_string(p);
                return false;
            }
        }
        return true;
    };
    if (g.order() * x.size() <= 1'000'000) {
        for (Elem e = 0; e < g.order(); ++e)
            for (Point p = 0; p < x.size(); ++p)
                if (!check(e, p)) return rep;
        return rep;
    }
    rep.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> ge(0, static_cast<Elem>(g.order() - 1));
    std::uniform_int_distribution<Point> pe(0, static_cast<Point>(x.size() - 1));
    for (std::size_t i = 0; i < samples; ++i)
        if (!check(ge(rng), pe(rng))) return rep;
    return rep;
}

bool orbit_stabilizer_consistent(const GSet& x) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < x.orbits().size(); ++i) {
        total += x.orbits()[i].size();
        if (x.orbits()[i].size() * x.stabilizer(i).order() != x.group()->order()) return false;
    }
    return total == x.size();
}

// ---------------------------------------------------------------------------

GroupoidCharacter tabulate(const GroupoidCharacter& sigma) {
    const std::size_t n = sigma.gset->size();
    const std::size_t order = sigma.gset->group()->order();
    auto table = std::make_shared<std::vector<Residue>>(n * order);
    for (Point x = 0; x < n; ++x)
        for (Elem g = 0; g < order; ++g) (*table)[x * order + g] = sigma.value(x, g);
    GroupoidCharacter out = sigma;
    out.value = [table, order](Point x, Elem g) { return (*table)[static_cast<std::size_t>(x) * order + g]; };
    return out;
}

GroupoidCharacter trivial_groupoid_character(const GSetPtr& x, const PrimeField& f) {
    return GroupoidCharacter{x, f, 1, [](Point, Elem) -> Residue { return 1; }};
}

CocycleReport verify_cocycle(const GroupoidCharacter& input, const CocycleOptions& options) {
    const GSet& x = *input.gset;
    const FiniteGroup& g = *x.group();
    const PrimeField& f = input.field;
    const std::uint64_t n = x.size(), order = g.order();
    const GroupoidCharacter sigma = n * order <= kValueTableLimit ? tabulate(input) : input;

    CocycleReport rep;
    for (Point p = 0; p < n; ++p)
        if (sigma.value(p, 0) != 1) rep.identity_ok = false;

    auto root_ok = [&](Residue v) {
        if (v == 0) return false;
        return input.root_order == 0 || f.pow(v, input.root_order) == 1;
    };
    auto check = [&](Point p, Elem a, Elem b) {
        ++rep.checked;
        const Residue lhs = sigma.value(p, g.multiply(b, a));
        const Residue first = sigma.value(p, a);
        const Residue rhs = f.mul(first, sigma.value(x.act(a, p), b));
        if (!root_ok(first)) rep.roots_ok = false;
        if (lhs != rhs) {
            ++rep.violation_count;
            if (rep.violations.size() < options.max_reported) rep.violations.push_back({p, a, b});
        }
    };

    bool exhaustive = false;
    switch (options.mode) {
    case CocycleOptions::Mode::Exhaustive: exhaustive = true; break;
    case CocycleOptions::Mode::Sampled: exhaustive = false; break;
    case CocycleOptions::Mode::Auto: exhaustive = n * order * order <= options.exhaustive_limit; break;
    }
    if (exhaustive) {
        rep.mode = CocycleReport::Mode::Exhaustive;
        for (Point p = 0; p < n; ++p)
            for (Elem a = 0; a < order; ++a)
                for (Elem b = 0; b < order; ++b) check(p, a, b);
    } else {
        rep.mode = CocycleReport::Mode::Sampled;
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<Elem> ge(0, static_cast<Elem>(order - 1));
        std::uniform_int_distribution<Point> pe(0, static_cast<Point>(n - 1));
        for (std::uint64_t i = 0; i < options.trials; ++i) {
            const Point p = pe(rng);
            const Elem a = ge(rng);
            check(p, a, ge(rng));
        }
    }
    return rep;
}

nlohmann::json to_json(const CocycleReport& report) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& w : report.violations) v.push_back({{"x", w.x}, {"g", w.g}, {"h", w.h}});
    return {{"mode", report.mode == CocycleReport::Mode::Exhaustive ? "exhaustive" : "sampled"},
            {"checked", report.checked},
            {"violations", std::move(v)},
            {"violation_count", report.violation_count},
            {"identity_ok", report.identity_ok},
            {"roots_ok", report.roots_ok},
            {"pass", report.ok()}};
}

ClassFunction geometric_induction(const GroupoidCharacter& sigma) {
    const GSet& x = *sigma.gset;
    const auto& cls = x.group()->classes();
    const PrimeField& f = sigma.field;
    std::vector<Residue> values(cls.count(), 0);
    for (std::size_t j = 0; j < cls.count(); ++j) {
        const Elem g = cls.representatives[j];
        for (Point p = 0; p < x.size(); ++p)
            if (x.act(g, p) == p) values[j] = f.add(values[j], sigma.value(p, g));
    }
    return ClassFunction::modular(x.group(), f, std::move(values));
}

// ---------------------------------------------------------------------------

IsotropyCharacter restrict_to_isotropy(const GroupoidCharacter& sigma) {
    IsotropyCharacter iota{sigma.gset, sigma.field, {}};
    const GSet& x = *sigma.gset;
    for (std::size_t i = 0; i < x.orbits().size(); ++i) {
        IsotropyCharacter::Orbit o{x.representative(i), x.stabilizer(i), {}};
        for (Elem h : o.stabilizer.members) o.values.push_back(sigma.value(o.representative, h));
        iota.orbits.push_back(std::move(o));
    }
    return iota;
}

bool is_multiplicative(const IsotropyCharacter::Orbit& orbit, const PrimeField& f) {
    const Subgroup& h = orbit.stabilizer;
    const FiniteGroup& g = *h.parent;
    if (orbit.values.size() != h.order() || orbit.values[0] != 1) return false;
    // Multiplicativity against a generating set extends to all of H.
    for (Elem s : h.generators) {
        const Residue vs = orbit.values[*h.position(s)];
        for (std::size_t i = 0; i < h.order(); ++i) {
            const auto pos = h.position(g.multiply(s, h.members[i]));
            if (!pos || orbit.values[*pos] != f.mul(vs, orbit.values[i])) return false;
        }
    }
    return true;
}

ClassFunction isotropy_class_function(const IsotropyCharacter::Orbit& orbit, const PrimeField& f) {
    if (!is_multiplicative(orbit, f)) throw CheckFailure("isotropy character is not multiplicative");
    auto hg = as_group(orbit.stabilizer);
    const auto& cls = hg->classes();
    std::vector<Residue> v(cls.count());
    for (std::size_t c = 0; c < cls.count(); ++c) v[c] = orbit.values[cls.representatives[c]];
    return ClassFunction::modular(hg, f, std::move(v));
}

ClassFunction stabilizer_induction_sum(const IsotropyCharacter& iota) {
    const GroupPtr& g = iota.gset->group();
    ClassFunction sum = ClassFunction::modular(g, iota.field, std::vector<Residue>(g->classes().count(), 0));
    for (const auto& o : iota.orbits) sum = sum + induce(o.stabilizer, isotropy_class_function(o, iota.field));
    return sum;
}

GroupoidCharacter extend_isotropy(const IsotropyCharacter& iota, std::uint64_t seed) {
    const GSetPtr xs = iota.gset;
    const PrimeField f = iota.field;
    const std::size_t n = xs->size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Residue> d(1, f.prime() - 1);
    auto alpha = std::make_shared<std::vector<Residue>>(n, 1);
    auto alpha_inv = std::make_shared<std::vector<Residue>>(n, 1);
    for (Point p = 0; p < n; ++p) {
        if (xs->representative(xs->orbit_of(p)) == p) continue;
        (*alpha)[p] = d(rng);
        (*alpha_inv)[p] = f.inv((*alpha)[p]);
    }
    auto orbits = std::make_shared<std::vector<IsotropyCharacter::Orbit>>(iota.orbits);
    auto value = [xs, f, alpha, alpha_inv, orbits](Point p, Elem e) -> Residue {
        const FiniteGroup& g = *xs->group();
        const Point q = xs->act(e, p);
        const auto& o = (*orbits)[xs->orbit_of(p)];
        const Elem h = g.multiply(g.multiply(g.inverse(xs->transversal(q)), e), xs->transversal(p));
        const Residue theta = o.values[*o.stabilizer.position(h)];
        return f.mul(f.mul((*alpha)[q], theta), (*alpha_inv)[p]);
    };
    return GroupoidCharacter{xs, f, 0, value};
}

} // namespace gmodels
