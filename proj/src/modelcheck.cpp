#include "gmodels/modelcheck.hpp"

#include "gmodels/errors.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace gmodels {

namespace {

nlohmann::json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

std::vector<std::int64_t> sorted(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

GelfandVerdict check_gelfand(const ClassFunction& chi, const CharacterTable& t) {
    GelfandVerdict v;
    v.multiplicities = multiplicities(chi, t);
    v.degrees = t.degrees;
    v.value_at_identity = chi.is_exact() ? chi.integers[0] : t.field.lift(chi.value_mod(t.field, 0));
    std::int64_t total = 0;
    for (std::size_t i = 0; i < t.size(); ++i) total += v.multiplicities[i] * t.degrees[i];
    v.degree_ok = total == v.value_at_identity;
    v.is_model = std::all_of(v.multiplicities.begin(), v.multiplicities.end(), [](std::int64_t m) { return m == 1; });
    return v;
}

nlohmann::json to_json(const GelfandVerdict& v) {
    return {{"multiplicities", v.multiplicities},
            {"degrees", v.degrees},
            {"value_at_identity", v.value_at_identity},
            {"is_model", v.is_model},
            {"degree_ok", v.degree_ok}};
}

std::vector<std::int64_t> permutation_character(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    const auto& cls = g.classes();
    std::vector<std::int64_t> meet(cls.count(), 0);
    for (Elem e : h.members) ++meet[cls.class_of[e]];
    const auto index = static_cast<std::int64_t>(g.order() / h.order());
    std::vector<std::int64_t> out(cls.count());
    for (std::size_t c = 0; c < cls.count(); ++c) {
        const auto size = static_cast<std::int64_t>(cls.sizes[c]);
        if ((index * meet[c]) % size != 0) throw CheckFailure("permutation character is not integral");
        out[c] = index * meet[c] / size;
    }
    return out;
}

Property1Verdict property1(const CharacterTable& t, const SubgroupOptions& options) {
    Property1Verdict v;
    v.group = t.group;
    v.subgroups = subgroups_up_to_conjugacy(t.group, options);
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& h : v.subgroups) rows.push_back(permutation_character(h));
    v.matrix = IntMatrix::from_rows(rows, t.group->classes().count());
    v.target = gelfand_character(t).integers;
    std::vector<BigInt> target(v.target.begin(), v.target.end());
    v.solution = solve_integer_combination(v.matrix, target);
    if (v.feasible()) {
        v.replayed = combine_rows(v.matrix, v.solution.coefficients) == target;
        if (!v.replayed) throw CheckFailure("property1: certificate does not replay");
    }
    return v;
}

Property1Verdict property1(const GroupPtr& g, const SubgroupOptions& options) {
    if (g->order() > options.max_order)
        throw CapExceeded("property1: group order " + std::to_string(g->order()) + " exceeds subgroup cap");
    return property1(character_table(g), options);
}

nlohmann::json to_json(const Property1Verdict& v) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < v.matrix.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < v.matrix.cols(); ++j) row.push_back(big_to_json(v.matrix(i, j)));
        rows.push_back({{"subgroup_order", v.subgroups[i].order()}, {"values", row}});
    }
    nlohmann::json out{{"order", v.group->order()},
                       {"outcome", to_string(v.solution.outcome)},
                       {"rank", v.solution.rank},
                       {"augmented_rank", v.solution.augmented_rank},
                       {"target", v.target},
                       {"permutation_characters", rows}};
    if (v.feasible()) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& x : v.solution.coefficients) c.push_back(big_to_json(x));
        out["coefficients"] = c;
        out["replayed"] = v.replayed;
    } else {
        out["witness"] = v.solution.witness;
    }
    return out;
}

std::vector<NaturalRow> natural_decomposition_table(const CharacterTable& t, const SubgroupOptions& options) {
    std::map<std::vector<std::int64_t>, NaturalRow> seen;
    for (const auto& h : subgroups_up_to_conjugacy(t.group, options)) {
        auto chi = ClassFunction::exact(t.group, permutation_character(h));
        auto m = multiplicities(chi, t);
        if (seen.count(m)) continue;
        seen[m] = NaturalRow{m, chi.integers[0], h.order()};
    }
    std::vector<NaturalRow> out;
    for (auto& [m, row] : seen) out.push_back(row);
    std::sort(out.begin(), out.end(), [](const NaturalRow& a, const NaturalRow& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        return a.multiplicities > b.multiplicities;
    });
    return out;
}

const std::vector<NaturalRow>& sl25_published_rows() {
    static const std::vector<NaturalRow> rows = {
        {{1, 2, 2, 3, 3, 4, 4, 5, 6}, 120, 1}, {{1, 0, 0, 3, 3, 4, 0, 5, 0}, 60, 2},
        {{1, 0, 0, 1, 1, 2, 2, 1, 2}, 40, 3},  {{1, 0, 0, 1, 1, 2, 0, 3, 0}, 30, 4},
        {{1, 0, 0, 1, 1, 0, 0, 1, 2}, 24, 5},  {{1, 0, 0, 1, 1, 2, 0, 1, 0}, 20, 6},
        {{1, 0, 0, 0, 0, 1, 0, 2, 0}, 15, 8},  {{1, 0, 0, 1, 1, 0, 0, 1, 0}, 12, 10},
        {{1, 0, 0, 0, 0, 1, 0, 1, 0}, 10, 12}, {{1, 0, 0, 0, 0, 0, 0, 1, 0}, 6, 20},
        {{1, 0, 0, 0, 0, 1, 0, 0, 0}, 5, 24},
    };
    return rows;
}

RowContainment match_rows(const std::vector<NaturalRow>& published, const std::vector<NaturalRow>& computed,
                          const std::vector<std::int64_t>& degrees) {
    std::set<std::vector<std::int64_t>> have;
    for (const auto& r : computed) have.insert(r.multiplicities);

    std::vector<std::pair<std::size_t, std::size_t>> blocks; // [begin, end)
    for (std::size_t i = 0; i < degrees.size();) {
        std::size_t j = i;
        while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    RowContainment best;
    best.total = published.size();
    std::vector<std::size_t> perm(degrees.size());
    std::iota(perm.begin(), perm.end(), 0);

    auto score = [&] {
        RowContainment r;
        r.total = published.size();
        r.perm = perm;
        for (const auto& row : published) {
            std::vector<std::int64_t> v(degrees.size(), 0);
            for (std::size_t k = 0; k < row.multiplicities.size() && k < perm.size(); ++k)
                v[perm[k]] = row.multiplicities[k];
            bool hit = row.multiplicities.size() == degrees.size() && have.count(v);
            r.row_found.push_back(hit);
            r.found += hit;
        }
        if (best.perm.empty() || r.found > best.found) best = r;
    };

    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
            score();
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(perm.begin() + static_cast<std::ptrdiff_t>(lo), perm.begin() + static_cast<std::ptrdiff_t>(hi));
        do {
            self(self, b + 1);
            if (best.ok()) return;
        } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(lo),
                                       perm.begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    rec(rec, 0);
    return best;
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<std::int64_t>& g96_published() {
    static const std::vector<std::int64_t> v = sorted({30, 2, -2, 6, 6, 2, 2, 2});
    return v;
}

std::vector<std::int64_t> nonzero(const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out;
    std::copy_if(v.begin(), v.end(), std::back_inserter(out), [](std::int64_t x) { return x != 0; });
    return out;
}

} // namespace

const G96Construction& g96_construction() {
    static const G96Construction result = [] {
        const GroupSpec c2xc4 = GroupSpec::semidirect(GroupSpec::cyclic(2), GroupSpec::cyclic(4), 0);
        const GroupSpec c4 = GroupSpec::cyclic(4);
        const GroupSpec c3 = GroupSpec::cyclic(3);
        const std::size_t outer = semidirect_actions(*build_group(c2xc4), *build_group(c4)).size();
        std::optional<G96Construction> nearest;
        std::size_t examined = 0;
        for (std::size_t i = 0; i < outer; ++i) {
            const GroupSpec nspec = GroupSpec::semidirect(c2xc4, c4, static_cast<int>(i));
            const std::size_t inner = semidirect_actions(*build_group(nspec), *build_group(c3)).size();
            for (std::size_t j = 0; j < inner; ++j) {
                ++examined;
                const GroupSpec spec = GroupSpec::semidirect(nspec, c3, static_cast<int>(j));
                auto g = build_group(spec);
                if (g->order() != 96) continue;
                const std::size_t k = g->classes().count();
                if (k != 8 && nearest) continue;
                auto gel = sorted(gelfand_character(character_table(g)).integers);
                G96Construction c{spec, g, examined, k, gel, k == 8 && gel == g96_published()};
                if (c.exact_match) return c;
                if (!nearest && nonzero(gel) == g96_published()) nearest = c;
            }
        }
        if (!nearest) throw CheckFailure("no ((C2 x C4) x| C4) x| C3 of order 96 with the expected Gelfand character");
        nearest->candidates = examined;
        return *nearest;
    }();
    return result;
}

GroupPtr construct_g96() {
    const auto& c = g96_construction();
    if (!c.exact_match)
        throw CheckFailure("no ((C2 x C4) x| C4) x| C3 has 8 classes and Gelfand multiset {30,2,-2,6,6,2,2,2}; "
                           "nearest: " + to_string(c.realization) + " with " + std::to_string(c.classes) +
                           " classes");
    return c.group;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json claim(const std::string& id, const std::string& ref, nlohmann::json expected, nlohmann::json computed,
                     bool pass) {
    return {{"id", id}, {"paper_ref", ref}, {"expected", std::move(expected)}, {"computed", std::move(computed)},
            {"pass", pass}};
}

nlohmann::json property1_claim(const std::string& id, const std::string& ref, const CharacterTable& t) {
    const auto v = property1(t);
    return claim(id, ref, "infeasible", to_string(v.solution.outcome), !v.feasible());
}

nlohmann::json run_guarded(const std::string& group, const std::function<nlohmann::json()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {{"group", group},
                {"claims", nlohmann::json::array({claim(group + ".error", "evaluation", "no error", e.what(), false)})}};
    }
}

nlohmann::json q8_report() {
    auto g = build_group(GroupSpec::quaternion8());
    const auto t = character_table(g);
    const auto gelfand = gelfand_character(t).integers;
    nlohmann::json claims = nlohmann::json::array();
    claims.push_back(claim("q8.classes", "quaternion group has 5 conjugacy classes", 5, g->classes().count(),
                           g->classes().count() == 5));
    const std::vector<std::int64_t> want = sorted({6, 0, 0, 2, 0});
    claims.push_back(claim("q8.gelfand_values", "Gelfand character of the quaternion group takes values [6 0 0 2 0]",
                           want, sorted(gelfand), sorted(gelfand) == want));
    const std::vector<std::int64_t> degrees{1, 1, 1, 1, 2};
    claims.push_back(claim("q8.degrees", "four 1-dimensional and one 2-dimensional irreducible", degrees, t.degrees,
                           t.degrees == degrees));
    std::vector<std::int64_t> carriers;
    for (const auto& row : natural_decomposition_table(t))
        if (row.multiplicities.back() != 0) carriers.push_back(row.degree);
    claims.push_back(claim("q8.two_dim_only_regular",
                           "the 2-dimensional irreducible appears only in the regular representation among "
                           "natural representations",
                           std::vector<std::int64_t>{8}, carriers, carriers == std::vector<std::int64_t>{8}));
    claims.push_back(property1_claim("q8.property1",
                                     "M cannot be an integer linear combination of natural representations", t));
    return {{"group", "Q8"}, {"claims", claims}};
}

nlohmann::json g96_report() {
    const auto& c = g96_construction();
    const auto t = character_table(c.group);
    nlohmann::json claims = nlohmann::json::array();
    claims.push_back(claim("g96.order", "group of order 96", 96, c.group->order(), c.group->order() == 96));
    claims.push_back(claim("g96.classes", "Gelfand character given on its 8 conjugacy classes", 8, c.classes,
                           c.classes == 8));
    claims.push_back(claim("g96.gelfand_values", "Gelfand character takes values [30 2 -2 6 6 2 2 2]",
                           g96_published(), c.gelfand, c.gelfand == g96_published()));
    claims.push_back(claim("g96.gelfand_nonzero_values",
                           "the listed values [30 2 -2 6 6 2 2 2] are the nonzero Gelfand values", g96_published(),
                           nonzero(c.gelfand), nonzero(c.gelfand) == g96_published()));
    const bool negative = c.gelfand.front() < 0;
    claims.push_back(claim("g96.negative_value", "counterexample to non-negativity of the Gelfand character", true,
                           negative, negative));
    claims.push_back(claim("g96.realization", "isomorphic to ((C2 x C4) x| C4) x| C3", "semidirect realization",
                           to_string(c.realization), true));
    claims.push_back(property1_claim(
        "g96.property1", "no integer linear combination of its permutation characters affords its Gelfand character",
        t));
    return {{"group", "G96"}, {"claims", claims}};
}

nlohmann::json sl25_report() {
    auto g = build_group(GroupSpec::sl(5));
    const auto t = character_table(g);
    nlohmann::json claims = nlohmann::json::array();
    const std::vector<std::int64_t> degrees{1, 2, 2, 3, 3, 4, 4, 5, 6};
    claims.push_back(claim("sl25.degrees", "dimensions of the irreducible representations of SL(2,5)", degrees,
                           t.degrees, t.degrees == degrees));
    const auto dim = gelfand_character(t).integers[0];
    claims.push_back(claim("sl25.dim_m", "Then dim M = 30", 30, dim, dim == 30));
    const auto rows = natural_decomposition_table(t);
    const auto match = match_rows(sl25_published_rows(), rows, t.degrees);
    nlohmann::json computed_rows = nlohmann::json::array();
    for (const auto& r : rows) computed_rows.push_back({{"multiplicities", r.multiplicities}, {"degree", r.degree}});
    claims.push_back(claim("sl25.natural_rows",
                           "each listed natural representation appears among the permutation characters",
                           {{"rows_contained", match.total}},
                           {{"rows_contained", match.found}, {"relabelling", match.perm}, {"rows", computed_rows}},
                           match.ok()));
    claims.push_back(property1_claim(
        "sl25.property1", "M cannot be obtained as a linear integer combination of these natural representations", t));
    return {{"group", "SL(2,5)"}, {"claims", claims}};
}

} // namespace

nlohmann::json counterexample_suite() {
    auto q8 = std::async(std::launch::async, [] { return run_guarded("q8", q8_report); });
    auto g96 = std::async(std::launch::async, [] { return run_guarded("g96", g96_report); });
    auto sl = std::async(std::launch::async, [] { return run_guarded("sl25", sl25_report); });
    return nlohmann::json::array({q8.get(), g96.get(), sl.get()});
}

bool suite_passed(const nlohmann::json& report) {
    for (const auto& group : report)
        for (const auto& c : group.at("claims"))
            if (!c.at("pass").get<bool>()) return false;
    return true;
}

} // namespace gmodels
