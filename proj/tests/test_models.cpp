#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmodels/models.hpp"

#include <algorithm>
#include <numeric>

using namespace gmodels;

namespace {

std::size_t count_square_roots_of_identity(int n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 0);
    std::size_t count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && w[w[i]] == i;
        count += ok;
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
}

std::vector<std::size_t> orbit_sizes(const GSet& x) {
    std::vector<std::size_t> s;
    for (const auto& o : x.orbits()) s.push_back(o.size());
    return s;
}

bool all_ones(const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t m) { return m == 1; });
}

} // namespace

TEST_CASE("involution sets") {
    CHECK(involution_gset(2)->size() == 2);
    CHECK(involution_gset(4)->size() == 10);
    for (int n = 2; n <= 7; ++n) CHECK(involution_gset(n)->size() == count_square_roots_of_identity(n));
    CHECK(involution_gset(8)->size() == 764);
    auto x = involution_gset(4);
    CHECK(orbit_sizes(*x) == std::vector<std::size_t>{1, 6, 3});
    std::vector<std::size_t> stab;
    for (std::size_t i = 0; i < 3; ++i) stab.push_back(x->stabilizer(i).order());
    CHECK(stab == std::vector<std::size_t>{24, 4, 8});
    CHECK_THROWS_AS(involution_gset(9), SpecError);
    CHECK_THROWS_AS(involution_gset(1), SpecError);
}

TEST_CASE("inversion counts") {
    const Word x = {1, 0, 3, 2}; // (12)(34)
    CHECK(inv_count(x, {1, 0, 2, 3}) == 1);
    CHECK(inv_count(x, {0, 1, 2, 3}) == 0);
    CHECK(inv_count(x, {1, 0, 3, 2}) == 2);
    CHECK(inv_count({0, 1, 2, 3}, {3, 2, 1, 0}) == 0);
    CHECK(inv_count(make_involution(x), {3, 2, 1, 0}) == 2);
    CHECK_THROWS_AS(make_involution({1, 2, 0}), CheckFailure);
}

TEST_CASE("sign character cocycle: exhaustive to n = 5, sampled beyond") {
    for (int n = 2; n <= 5; ++n) {
        auto x = involution_gset(n);
        const auto rep = verify_cocycle(sn_sign_character(x, PrimeField(choose_prime(*x->group()))));
        CHECK(rep.ok());
        CHECK(rep.mode == CocycleReport::Mode::Exhaustive);
    }
    for (int n = 6; n <= 8; ++n) {
        auto x = involution_gset(n);
        CocycleOptions opt;
        opt.seed = 1000 + n;
        opt.trials = 1'000'000;
        const auto rep = verify_cocycle(sn_sign_character(x, PrimeField(choose_prime(*x->group()))), opt);
        CHECK(rep.ok());
        CHECK(rep.mode == CocycleReport::Mode::Sampled);
        CHECK(rep.checked >= 1'000'000);
    }
}

TEST_CASE("centralizer structure of every involution up to n = 7") {
    for (int n = 2; n <= 7; ++n) {
        auto x = involution_gset(n);
        const auto sigma = sn_sign_character(x, PrimeField(choose_prime(*x->group())));
        for (Point p = 0; p < x->size(); ++p) {
            const auto rep = centralizer_structure(sigma, p);
            CAPTURE(n);
            CAPTURE(p);
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("S4 example") {
    auto x = involution_gset(4);
    const auto t = character_table(x->group());
    const auto sigma = sn_sign_character(x, t.field);
    const FiniteGroup& g = *x->group();
    const PrimeField& f = t.field;

    SUBCASE("restrictions") {
        // (12): sgn on <(12)>, trivial on <(34)>
        const Point p12 = *x->find({1, 0, 2, 3});
        const Subgroup c12 = centralizer(x->group(), g.index_of({1, 0, 2, 3}));
        CHECK(c12.order() == 4);
        CHECK(sigma.value(p12, g.index_of({1, 0, 2, 3})) == f.neg(1));
        CHECK(sigma.value(p12, g.index_of({0, 1, 3, 2})) == 1);
        CHECK(sigma.value(p12, g.index_of({1, 0, 3, 2})) == f.neg(1));
        // (12)(34): the signature restricted to the order-8 centralizer
        const Word dbl = {1, 0, 3, 2};
        const Point pd = *x->find(dbl);
        const Subgroup cd = centralizer(x->group(), g.index_of(dbl));
        CHECK(cd.order() == 8);
        for (Elem h : cd.members) {
            int inversions = 0;
            const Word& w = g.word(h);
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) inversions += w[i] > w[j];
            CHECK(sigma.value(pd, h) == (inversions % 2 ? f.neg(1) : 1));
        }
        // identity: trivial on G
        for (Elem h = 0; h < 24; ++h) CHECK(sigma.value(0, h) == 1);
    }
    SUBCASE("decompositions") {
        const auto iota = restrict_to_isotropy(sigma);
        REQUIRE(iota.orbits.size() == 3);
        CHECK(multiplicities(induce(iota.orbits[1].stabilizer, isotropy_class_function(iota.orbits[1], f)), t) ==
              std::vector<std::int64_t>{0, 0, 0, 1, 1});
        CHECK(multiplicities(induce(iota.orbits[2].stabilizer, isotropy_class_function(iota.orbits[2], f)), t) ==
              std::vector<std::int64_t>{0, 1, 1, 0, 0});
        const auto chi = geometric_induction(sigma);
        CHECK(chi.residues[0] == 10);
        CHECK(multiplicities(chi, t) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
        CHECK(stabilizer_induction_sum(iota).residues == chi.residues);
    }
}

TEST_CASE("involution model is multiplicity free for n = 2..7") {
    for (int n = 2; n <= 7; ++n) {
        auto x = involution_gset(n);
        const auto t = character_table(x->group());
        const auto sigma = sn_sign_character(x, t.field);
        CAPTURE(n);
        CHECK(all_ones(multiplicities(geometric_induction(sigma), t)));
    }
}

TEST_CASE("PGL(2,q) forms") {
    for (int q : {3, 5, 7}) {
        auto x = pgl2_symmetric_gset(q);
        const std::size_t qq = q;
        CAPTURE(q);
        CHECK(x->size() == qq * qq + 1);
        CHECK(x->orbits().size() == 3);
        CHECK(verify_action(*x).ok);
        std::vector<std::size_t> stab;
        for (std::size_t i = 0; i < 3; ++i) stab.push_back(x->stabilizer(i).order());
        std::sort(stab.begin(), stab.end());
        std::vector<std::size_t> expect{2 * (qq - 1), 2 * (qq + 1), qq * (qq * qq - 1)};
        std::sort(expect.begin(), expect.end());
        CHECK(stab == expect);
        // the alternating point is fixed by everything
        const Point alt = *x->find({0, 1, static_cast<int>(q - 1), 0});
        CHECK(x->orbits()[x->orbit_of(alt)].size() == 1);
    }
    auto x3 = pgl2_symmetric_gset(3);
    std::vector<std::size_t> sizes = orbit_sizes(*x3);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 6});
    CHECK_THROWS_AS(pgl2_symmetric_gset(4), SpecError);
    CHECK_THROWS_AS(pgl2_symmetric_gset(2), SpecError);
}

TEST_CASE("PGL(2,q) epsilon model") {
    for (int q : {3, 5, 7}) {
        CAPTURE(q);
        auto x = pgl2_symmetric_gset(q);
        const auto t = character_table(x->group());
        const auto eps = pgl2_epsilon(x, t.field);
        const auto rep = verify_pgl2_epsilon(eps, q);
        CHECK(rep.multiplicative);
        CHECK(rep.eps1_order_two);
        CHECK(rep.eps1_kernel_split_torus);
        CHECK(rep.h1_normalizes_t1);
        CHECK(rep.eps2_trivial);
        CHECK(rep.h2_normalizes_t2);
        CHECK(rep.eps3_det_mod_squares);
        CHECK(rep.eps3_line_sign);
        CHECK(rep.ok());
        for (const auto& o : eps.orbits) CHECK(o.values[0] == 1);

        const auto model = stabilizer_induction_sum(eps);
        CHECK(all_ones(multiplicities(model, t)));
        CHECK(model.residues[0] == static_cast<Residue>(q * q + 1));

        const auto tilde = pgl2_epsilon_groupoid(x, t.field);
        CHECK(verify_cocycle(tilde).ok());
        const auto back = restrict_to_isotropy(tilde);
        for (std::size_t i = 0; i < eps.orbits.size(); ++i) CHECK(back.orbits[i].values == eps.orbits[i].values);
        CHECK(geometric_induction(tilde).residues == model.residues);
    }
}

TEST_CASE("Grassmann chains and the Gelfand-Graev character") {
    CHECK(companion(1, 0, 1, 3, CompanionRule::LexMin) == std::pair{0, 1});
    CHECK(companion(1, 0, 1, 3, CompanionRule::LexMax) == std::pair{2, 1});
    CHECK(companion(0, 1, 2, 5, CompanionRule::LexMin) == std::pair{3, 0});
    for (int q : {2, 3, 5}) {
        CAPTURE(q);
        auto x = gg_gset(q);
        const std::size_t qq = q;
        CHECK(x->size() == (qq * qq - 1) * (qq - 1));
        CHECK(x->orbits().size() == 1);
        CHECK(verify_action(*x).ok);
        const Point e1 = *x->find({1, 0, 1});
        std::vector<Elem> stab;
        for (Elem e = 0; e < x->group()->order(); ++e)
            if (x->act(e, e1) == e1) stab.push_back(e);
        CHECK(stab == unipotent_subgroup(x->group()).members);

        const auto t = character_table(x->group(), {static_cast<std::uint32_t>(q)});
        const auto psi = gg_character(x, t.field);
        for (Point p = 0; p < x->size(); ++p) CHECK(psi.value(p, 0) == 1);
        CocycleOptions opt;
        opt.mode = CocycleOptions::Mode::Exhaustive;
        CHECK(verify_cocycle(psi, opt).ok());

        const auto geo = geometric_induction(psi);
        CHECK(geo.residues[0] == x->size());
        CHECK(geo.residues == classical_gg_character(x->group(), t.field).residues);
        const auto alt = gg_character(x, t.field, CompanionRule::LexMax);
        CHECK(verify_cocycle(alt).ok());
        CHECK(geometric_induction(alt).residues == geo.residues);
    }
}

TEST_CASE("Gelfand-Graev multiplicities over GL(2,3) and GL(2,5)") {
    for (int q : {3, 5}) {
        auto x = gg_gset(q);
        const auto t = character_table(x->group(), {static_cast<std::uint32_t>(q)});
        const auto m = multiplicities(geometric_induction(gg_character(x, t.field)), t);
        for (std::size_t i = 0; i < t.size(); ++i) CHECK(m[i] == (t.degrees[i] == 1 ? 0 : 1));
    }
}

TEST_CASE("S3 triangle cochains") {
    const auto probe = character_table(build_group(GroupSpec::symmetric(3)));
    const auto model = s3_cohomology_model(probe.field);
    const auto t = character_table(model.group);
    REQUIRE(t.field.prime() == probe.field.prime());
    CHECK(model.ok());
    CHECK(model.rank_delta_minus1 == 1);
    CHECK(model.rank_delta0 == 2);
    CHECK(model.dim_h1 == 4);
    CHECK(model.chi_h1.integers[0] == 4);
    CHECK(multiplicities(model.chi_h1, t) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(multiplicities(model.chi_edges, t) == std::vector<std::int64_t>{1, 1, 2});
    CHECK(same_values(model.chi_h1, gelfand_character(t)));
}
