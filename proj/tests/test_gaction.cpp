#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmodels/gaction.hpp"
#include "gmodels/models.hpp"

#include <algorithm>

using namespace gmodels;

namespace {

// G acting on the left cosets of H; points are sorted member lists.
GSetPtr coset_space(const GroupPtr& g, const Subgroup& h) {
    std::vector<Word> cosets;
    for (Elem x = 0; x < g->order(); ++x) {
        Word c;
        for (Elem m : h.members) c.push_back(static_cast<int>(g->multiply(x, m)));
        std::sort(c.begin(), c.end());
        cosets.push_back(c);
    }
    return GSet::create(g, cosets, [g](Elem e, const Word& c) {
        Word out;
        for (int m : c) out.push_back(static_cast<int>(g->multiply(e, static_cast<Elem>(m))));
        std::sort(out.begin(), out.end());
        return out;
    });
}

std::vector<Residue> fixed_point_counts(const GSet& x, const PrimeField& f) {
    const auto& cls = x.group()->classes();
    std::vector<Residue> out;
    for (Elem rep : cls.representatives) {
        std::int64_t n = 0;
        for (Point p = 0; p < x.size(); ++p) n += x.act(rep, p) == p;
        out.push_back(f.reduce(n));
    }
    return out;
}

} // namespace

TEST_CASE("action laws and orbit-stabilizer") {
    for (int n : {2, 3, 4, 5, 6}) {
        auto x = involution_gset(n);
        const auto rep = verify_action(*x);
        CHECK(rep.ok);
        CHECK(rep.exhaustive);
        CHECK(orbit_stabilizer_consistent(*x));
        for (Point p = 0; p < x->size(); ++p)
            CHECK(x->act(x->transversal(p), x->representative(x->orbit_of(p))) == p);
    }
    auto x8 = involution_gset(8);
    const auto rep = verify_action(*x8, 3, 20000);
    CHECK(rep.ok);
    CHECK_FALSE(rep.exhaustive);
}

TEST_CASE("untwisted induction is the fixed-point permutation character") {
    auto g = build_group(GroupSpec::gl(3));
    const auto t = character_table(g);
    for (const auto& h : subgroups_up_to_conjugacy(g)) {
        auto x = coset_space(g, h);
        CHECK(x->size() * h.order() == g->order());
        const auto chi = geometric_induction(trivial_groupoid_character(x, t.field));
        CHECK(chi.residues == fixed_point_counts(*x, t.field));
        CHECK(chi.residues[0] == x->size());
        CHECK(verify_cocycle(trivial_groupoid_character(x, t.field)).ok());
    }
}

TEST_CASE("single orbit with an isotropy character induces like the stabilizer") {
    auto g = build_group(GroupSpec::symmetric(4));
    const auto t = character_table(g);
    for (const auto& h : subgroups_up_to_conjugacy(g)) {
        auto x = coset_space(g, h);
        REQUIRE(x->orbits().size() == 1);
        CHECK(x->stabilizer(0).members == h.members);
        auto th = try_character_table(as_group(h), t.field.prime(), 1);
        REQUIRE(th.has_value());
        for (std::size_t i = 0; i < th->size(); ++i) {
            if (th->degrees[i] != 1) continue;
            // theta on H, indexed by member position
            const auto& hc = th->group->classes();
            IsotropyCharacter iota{x, t.field, {{x->representative(0), x->stabilizer(0), {}}}};
            for (std::size_t pos = 0; pos < h.order(); ++pos)
                iota.orbits[0].values.push_back(th->values(i, hc.class_of[pos]));
            CHECK(is_multiplicative(iota.orbits[0], t.field));
            const auto sigma = extend_isotropy(iota, 17 + i);
            CHECK(verify_cocycle(sigma).ok());
            const auto geo = geometric_induction(sigma);
            CHECK(geo.residues == induce(h, th->character(i)).residues);
            CHECK(geo.residues == stabilizer_induction_sum(iota).residues);
        }
    }
}

TEST_CASE("induction depends only on the isotropy restriction") {
    auto x = involution_gset(5);
    const auto t = character_table(x->group());
    const auto sigma = sn_sign_character(x, t.field);
    const auto iota = restrict_to_isotropy(sigma);
    const auto base = geometric_induction(sigma);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto other = extend_isotropy(iota, seed);
        CHECK(verify_cocycle(other).ok());
        // values away from the representatives really differ
        bool differs = false;
        for (Point p = 0; p < x->size() && !differs; ++p)
            for (Elem e = 0; e < x->group()->order() && !differs; ++e) differs = other.value(p, e) != sigma.value(p, e);
        CHECK(differs);
        CHECK(geometric_induction(other).residues == base.residues);
        const auto back = restrict_to_isotropy(other);
        for (std::size_t i = 0; i < iota.orbits.size(); ++i) CHECK(back.orbits[i].values == iota.orbits[i].values);
    }
    CHECK(stabilizer_induction_sum(iota).residues == base.residues);
}

TEST_CASE("a corrupted value is caught with a witness triple") {
    auto x = involution_gset(4);
    const auto t = character_table(x->group());
    auto sigma = tabulate(sn_sign_character(x, t.field));
    const auto good = verify_cocycle(sigma);
    CHECK(good.ok());
    CHECK(good.mode == CocycleReport::Mode::Exhaustive);
    CHECK(good.checked == x->size() * 24 * 24);

    const auto base = sigma.value;
    const PrimeField f = t.field;
    GroupoidCharacter bad = sigma;
    bad.value = [base, f](Point p, Elem e) { return p == 3 && e == 5 ? f.neg(base(p, e)) : base(p, e); };
    const auto rep = verify_cocycle(bad);
    CHECK_FALSE(rep.ok());
    REQUIRE_FALSE(rep.violations.empty());
    const auto& w = rep.violations.front();
    const FiniteGroup& g = *x->group();
    CHECK(bad.value(w.x, g.multiply(w.h, w.g)) != f.mul(bad.value(w.x, w.g), bad.value(x->act(w.g, w.x), w.h)));

    const auto j = to_json(rep);
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["checked"].get<std::uint64_t>() == rep.checked);
    CHECK(j["violations"].size() == rep.violations.size());
    CHECK(j["violations"][0].contains("x"));
    CHECK(j["violations"][0].contains("g"));
    CHECK(j["violations"][0].contains("h"));
}

TEST_CASE("sampled cocycle mode is seeded") {
    auto x = involution_gset(4);
    const auto t = character_table(x->group());
    const auto sigma = sn_sign_character(x, t.field);
    CocycleOptions opt;
    opt.mode = CocycleOptions::Mode::Sampled;
    opt.trials = 5000;
    const auto a = verify_cocycle(sigma, opt);
    CHECK(a.mode == CocycleReport::Mode::Sampled);
    CHECK(a.checked == 5000);
    CHECK(a.ok());
}

TEST_CASE("roots of unity of the declared order") {
    auto x = involution_gset(3);
    const auto t = character_table(x->group());
    auto sigma = trivial_groupoid_character(x, t.field);
    sigma.value = [](Point, Elem e) -> Residue { return e == 0 ? 1 : 1; };
    CHECK(verify_cocycle(sigma).roots_ok);
    sigma.root_order = 1;
    const Residue two = 2;
    sigma.value = [two](Point, Elem e) -> Residue { return e == 0 ? 1 : two; };
    const auto rep = verify_cocycle(sigma);
    CHECK_FALSE(rep.roots_ok);
    CHECK_FALSE(rep.ok());
}
