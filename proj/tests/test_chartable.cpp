#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmodels/chartable.hpp"

#include <algorithm>

using namespace gmodels;

namespace {

ClassTensor class_tensor_brute(const FiniteGroup& g) {
    const auto& c = g.classes();
    ClassTensor a(c.count());
    for (std::size_t i = 0; i < c.count(); ++i)
        for (std::size_t j = 0; j < c.count(); ++j)
            for (Elem x : c.members[i])
                for (Elem y : c.members[j]) {
                    const Elem z = g.multiply(x, y);
                    for (std::size_t l = 0; l < c.count(); ++l)
                        if (c.representatives[l] == z) ++a(i, j, l);
                }
    return a;
}

// Ind(theta)(g) = (1/|H|) sum_{x in G, x g x^-1 in H} theta(x g x^-1)
std::vector<Residue> induce_brute(const Subgroup& h, const ClassFunction& theta) {
    const FiniteGroup& g = *h.parent;
    const PrimeField f = theta.field();
    const auto& c = g.classes();
    const auto& hc = theta.group->classes();
    std::vector<Residue> out;
    for (std::size_t j = 0; j < c.count(); ++j) {
        Residue s = 0;
        for (Elem x = 0; x < g.order(); ++x) {
            const Elem y = g.conjugate(c.representatives[j], x);
            if (auto pos = h.position(y)) s = f.add(s, theta.residues[hc.class_of[*pos]]);
        }
        out.push_back(f.div(s, f.reduce(static_cast<std::int64_t>(h.order()))));
    }
    return out;
}

const GroupSpec kGroups[] = {GroupSpec::symmetric(1), GroupSpec::symmetric(3), GroupSpec::symmetric(4),
                             GroupSpec::symmetric(5), GroupSpec::cyclic(7),    GroupSpec::quaternion8(),
                             GroupSpec::gl(2),        GroupSpec::gl(3),        GroupSpec::sl(5),
                             GroupSpec::pgl(3),       GroupSpec::pgl(5),       GroupSpec::pgl(7)};

} // namespace

TEST_CASE("admissible primes") {
    auto s4 = build_group(GroupSpec::symmetric(4));
    CHECK(choose_prime(*s4) == 61);
    CHECK(next_admissible_prime(*s4, 1, 61) == 73);
    auto gl3 = build_group(GroupSpec::gl(3));
    const auto p = choose_prime(*gl3, 3);
    CHECK((p - 1) % gl3->exponent() == 0);
    CHECK(p > 96);
}

TEST_CASE("class tensor matches brute force") {
    for (auto spec : {GroupSpec::symmetric(4), GroupSpec::gl(3), GroupSpec::quaternion8()}) {
        auto g = build_group(spec);
        const auto a = class_tensor(*g), b = class_tensor_brute(*g);
        const std::size_t k = g->classes().count();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t l = 0; l < k; ++l) CHECK(a(i, j, l) == b(i, j, l));
    }
}

TEST_CASE("orthogonality for every group in range") {
    for (const auto& spec : kGroups) {
        auto g = build_group(spec);
        const auto t = character_table(g);
        CAPTURE(to_string(spec));
        CHECK(t.size() == g->classes().count());
        const auto rep = check_orthogonality(t);
        CHECK(rep.ok());
    }
}

TEST_CASE("known degree sequences") {
    auto degrees = [](GroupSpec s) { return character_table(build_group(s)).degrees; };
    CHECK(degrees(GroupSpec::symmetric(4)) == std::vector<std::int64_t>{1, 1, 2, 3, 3});
    CHECK(degrees(GroupSpec::symmetric(5)) == std::vector<std::int64_t>{1, 1, 4, 4, 5, 5, 6});
    CHECK(degrees(GroupSpec::quaternion8()) == std::vector<std::int64_t>{1, 1, 1, 1, 2});
    CHECK(degrees(GroupSpec::sl(5)) == std::vector<std::int64_t>{1, 2, 2, 3, 3, 4, 4, 5, 6});
    CHECK(degrees(GroupSpec::gl(3)) == std::vector<std::int64_t>{1, 1, 2, 2, 2, 3, 3, 4});
    CHECK(degrees(GroupSpec::pgl(5)) == std::vector<std::int64_t>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("symmetric group characters are rational integers") {
    auto g = build_group(GroupSpec::symmetric(5));
    const auto t = character_table(g);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto chi = lift_exact(t.character(i), t.degrees[i]);
        CHECK(chi.integers[0] == t.degrees[i]);
    }
}

TEST_CASE("Gelfand character of the quaternion group") {
    const auto t = character_table(build_group(GroupSpec::quaternion8()));
    auto v = gelfand_character(t).integers;
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<std::int64_t>{0, 0, 0, 2, 6});
}

TEST_CASE("induction matches the brute-force formula") {
    for (auto spec : {GroupSpec::symmetric(4), GroupSpec::gl(3), GroupSpec::pgl(5)}) {
        auto g = build_group(spec);
        const auto t = character_table(g);
        for (const auto& h : subgroups_up_to_conjugacy(g)) {
            auto hg = as_group(h);
            auto th = try_character_table(hg, t.field.prime(), 1);
            REQUIRE(th.has_value());
            for (std::size_t i = 0; i < th->size(); ++i) {
                const auto theta = th->character(i);
                CHECK(induce(h, theta).residues == induce_brute(h, theta));
            }
        }
    }
}

TEST_CASE("Frobenius reciprocity, exhaustive over subgroups of groups up to order 500") {
    for (auto spec : {GroupSpec::symmetric(3), GroupSpec::symmetric(4), GroupSpec::quaternion8(), GroupSpec::gl(3),
                      GroupSpec::sl(5), GroupSpec::pgl(5), GroupSpec::pgl(7)}) {
        auto g = build_group(spec);
        CAPTURE(to_string(spec));
        REQUIRE(g->order() <= 500);
        const auto t = character_table(g);
        for (const auto& h : subgroups_up_to_conjugacy(g)) {
            auto hg = as_group(h);
            auto th = try_character_table(hg, t.field.prime(), 1);
            REQUIRE(th.has_value());
            for (std::size_t i = 0; i < th->size(); ++i) {
                const auto ind = induce(h, th->character(i));
                for (std::size_t j = 0; j < t.size(); ++j)
                    CHECK(inner_product(ind, t.character(j)) ==
                          inner_product(th->character(i), restrict_to(h, hg, t.character(j))));
            }
        }
    }
}

TEST_CASE("multiplicities reject non-characters") {
    auto g = build_group(GroupSpec::symmetric(3));
    const auto t = character_table(g);
    CHECK(multiplicities(regular_character(g, t.field), t) == std::vector<std::int64_t>{1, 1, 2});
    const auto bad = t.character(0) - t.character(2);
    CHECK_THROWS_AS(multiplicities(bad, t), CheckFailure);
}

TEST_CASE("exact and modular inner products agree") {
    auto g = build_group(GroupSpec::symmetric(4));
    const auto t = character_table(g);
    const auto reg = lift_exact(regular_character(g, t.field), 24);
    CHECK(inner_product(reg, reg) == 24);
    CHECK(inner_product(to_modular(reg, t.field), reg) == 24);
}
