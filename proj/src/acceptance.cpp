#include "gmodels/acceptance.hpp"

#include "gmodels/modelcheck.hpp"
#include "gmodels/models.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>

namespace gmodels {

namespace {

struct Check {
    CriterionResult& r;
    void operator()(bool ok, const std::string& what) {
        if (!ok) r.failures.push_back(what);
    }
};

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream ss;
    ss << '(';
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
    ss << ')';
    return ss.str();
}

std::string join(const std::vector<std::size_t>& v) {
    return join(std::vector<std::int64_t>(v.begin(), v.end()));
}

bool all_ones(const std::vector<std::int64_t>& m) {
    return std::all_of(m.begin(), m.end(), [](std::int64_t x) { return x == 1; });
}

void sn_model(CriterionResult& r, const AcceptanceOptions&) {
    Check check{r};
    std::ostringstream d;
    for (int n = 2; n <= 7; ++n) {
        auto x = involution_gset(n);
        const auto t = character_table(x->group());
        const auto m = multiplicities(geometric_induction(sn_sign_character(x, t.field)), t);
        check(all_ones(m), "S" + std::to_string(n) + " multiplicities " + join(m));
        d << "S" << n << ":" << m.size() << "x1 ";
    }
    r.detail = d.str();
}

void s4_example(CriterionResult& r, const AcceptanceOptions&) {
    Check check{r};
    auto x = involution_gset(4);
    const FiniteGroup& g = *x->group();
    const auto t = character_table(x->group());
    const PrimeField& f = t.field;
    const auto sigma = sn_sign_character(x, f);

    std::vector<std::size_t> sizes, stabs;
    for (std::size_t i = 0; i < x->orbits().size(); ++i) {
        sizes.push_back(x->orbits()[i].size());
        stabs.push_back(x->stabilizer(i).order());
    }
    check(sizes == std::vector<std::size_t>{1, 6, 3}, "orbit sizes " + join(sizes));
    check(stabs == std::vector<std::size_t>{24, 4, 8}, "stabilizer orders " + join(stabs));

    const auto iota = restrict_to_isotropy(sigma);
    auto parity = [&](Elem h) {
        const Word& w = g.word(h);
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inv += w[i] > w[j];
        return inv % 2 ? f.neg(1) : Residue{1};
    };
    // identity: trivial
    bool trivial = true;
    for (Residue v : iota.orbits[0].values) trivial = trivial && v == 1;
    check(trivial, "restriction at the identity is not trivial");
    // (12): sgn on (12), trivial on (34)
    const Point p12 = *x->find({1, 0, 2, 3});
    const Subgroup& h12 = x->stabilizer(x->orbit_of(p12));
    const Elem t12 = g.index_of({1, 0, 2, 3}), t34 = g.index_of({0, 1, 3, 2});
    check(h12.contains(t12) && h12.contains(t34) && h12.order() == 4, "centralizer of (12)");
    check(sigma.value(p12, t12) == f.neg(1) && sigma.value(p12, t34) == 1, "restriction at (12) is not sgn x 1");
    // (12)(34): the sign of S4 restricted
    const Point pd = *x->find({1, 0, 3, 2});
    bool sign = true;
    for (Elem h : x->stabilizer(x->orbit_of(pd)).members) sign = sign && sigma.value(pd, h) == parity(h);
    check(sign, "restriction at (12)(34) is not the sign");

    const auto m1 = multiplicities(induce(iota.orbits[1].stabilizer, isotropy_class_function(iota.orbits[1], f)), t);
    const auto m2 = multiplicities(induce(iota.orbits[2].stabilizer, isotropy_class_function(iota.orbits[2], f)), t);
    check(m1 == std::vector<std::int64_t>{0, 0, 0, 1, 1}, "Ind from the order-4 centralizer " + join(m1));
    // sign + sigma2: rows 1 and 2 of the degree-sorted table (1, sign, sigma2, sigma3, sign sigma3)
    check(t.degrees == std::vector<std::int64_t>{1, 1, 2, 3, 3}, "S4 degrees " + join(t.degrees));
    check(m2 == std::vector<std::int64_t>{0, 1, 1, 0, 0}, "Ind from the order-8 centralizer " + join(m2));
    r.detail = "orbits " + join(sizes) + " stabilizers " + join(stabs) + " Ind " + join(m1) + " " + join(m2);
}

void pgl_model(CriterionResult& r, const AcceptanceOptions&) {
    Check check{r};
    std::ostringstream d;
    for (int q : {3, 5, 7}) {
        const std::string tag = "q=" + std::to_string(q) + " ";
        auto x = pgl2_symmetric_gset(q);
        const auto t = character_table(x->group());
        check(x->orbits().size() == 3, tag + "orbit count " + std::to_string(x->orbits().size()));
        std::vector<std::size_t> stabs;
        for (std::size_t i = 0; i < x->orbits().size(); ++i) stabs.push_back(x->stabilizer(i).order());
        std::sort(stabs.begin(), stabs.end());
        const std::size_t qq = q;
        std::vector<std::size_t> want{2 * (qq - 1), 2 * (qq + 1), x->group()->order()};
        std::sort(want.begin(), want.end());
        check(stabs == want, tag + "stabilizer orders " + join(stabs));
        const auto eps = pgl2_epsilon(x, t.field);
        const auto rep = verify_pgl2_epsilon(eps, q);
        check(rep.eps1_order_two && rep.eps1_kernel_split_torus && rep.h1_normalizes_t1,
              tag + "epsilon_1 is not the order-two character with kernel the split torus");
        check(rep.eps2_trivial && rep.h2_normalizes_t2, tag + "epsilon_2 is not trivial on N(T_2)");
        check(rep.eps3_det_mod_squares && rep.eps3_line_sign, tag + "epsilon_3 is not det mod squares");
        check(rep.multiplicative, tag + "epsilon is not multiplicative");
        const auto v = check_gelfand(stabilizer_induction_sum(eps), t);
        check(v.is_model && v.degree_ok, tag + "not a Gelfand model " + join(v.multiplicities));
        d << tag << "stabilizers " << join(stabs) << " ";
    }
    r.detail = d.str();
}

void gelfand_graev(CriterionResult& r, const AcceptanceOptions&) {
    Check check{r};
    std::ostringstream d;
    for (int q : {2, 3, 5}) {
        const std::string tag = "q=" + std::to_string(q) + " ";
        auto x = gg_gset(q);
        TableOptions topt;
        topt.aux_root_order = static_cast<std::uint32_t>(q);
        const auto t = character_table(x->group(), topt);
        const auto psi = gg_character(x, t.field);
        CocycleOptions copt;
        copt.mode = CocycleOptions::Mode::Exhaustive;
        const auto cyc = verify_cocycle(psi, copt);
        check(cyc.ok(), tag + "cocycle violations " + std::to_string(cyc.violation_count));
        const auto geo = geometric_induction(psi);
        check(geo.residues == classical_gg_character(x->group(), t.field).residues,
              tag + "geometric and classical induction differ");
        const auto m = multiplicities(geo, t);
        std::vector<std::int64_t> on_linear, on_higher;
        for (std::size_t i = 0; i < t.size(); ++i) (t.degrees[i] == 1 ? on_linear : on_higher).push_back(m[i]);
        check(all_ones(on_higher), tag + "multiplicities on degree > 1 " + join(on_higher));
        check(std::all_of(on_linear.begin(), on_linear.end(), [](std::int64_t v) { return v == 0; }),
              tag + "multiplicities on linear characters " + join(on_linear));
        d << tag << "linear " << join(on_linear) << " higher " << join(on_higher) << " ";
    }
    r.detail = d.str();
}

void induction_identity(CriterionResult& r, const AcceptanceOptions& o) {
    Check check{r};
    std::size_t pairs = 0;
    auto compare = [&](const GroupoidCharacter& sigma, const std::string& what) {
        ++pairs;
        check(geometric_induction(sigma).residues == stabilizer_induction_sum(restrict_to_isotropy(sigma)).residues,
              what);
    };
    for (int n = 2; n <= 7; ++n) {
        auto x = involution_gset(n);
        const auto f = PrimeField(choose_prime(*x->group()));
        compare(sn_sign_character(x, f), "S" + std::to_string(n) + " involutions");
        compare(trivial_groupoid_character(x, f), "S" + std::to_string(n) + " involutions, trivial");
    }
    for (int q : {3, 5, 7}) {
        auto x = pgl2_symmetric_gset(q);
        const auto f = PrimeField(choose_prime(*x->group()));
        compare(pgl2_epsilon_groupoid(x, f), "PGL(2," + std::to_string(q) + ") forms");
        compare(extend_isotropy(pgl2_epsilon(x, f), o.seed), "PGL(2," + std::to_string(q) + ") rescaled");
    }
    for (int q : {2, 3, 5}) {
        auto x = gg_gset(q);
        const auto f = PrimeField(choose_prime(*x->group(), static_cast<std::uint32_t>(q)));
        compare(gg_character(x, f, CompanionRule::LexMin), "GL(2," + std::to_string(q) + ") chains");
        compare(gg_character(x, f, CompanionRule::LexMax), "GL(2," + std::to_string(q) + ") chains, max companion");
    }
    r.detail = std::to_string(pairs) + " pairs";
}

void counterexamples(CriterionResult& r, const AcceptanceOptions&) {
    const auto report = counterexample_suite();
    std::size_t total = 0;
    for (const auto& g : report)
        for (const auto& c : g.at("claims")) {
            ++total;
            if (!c.at("pass").get<bool>())
                r.failures.push_back(c.at("id").get<std::string>() + ": expected " + c.at("expected").dump() +
                                     ", computed " + c.at("computed").dump());
        }
    r.detail = std::to_string(total - r.failures.size()) + "/" + std::to_string(total) + " claims";
}

void positive_property1(CriterionResult& r, const AcceptanceOptions&) {
    Check check{r};
    std::ostringstream d;
    for (auto spec : {GroupSpec::symmetric(4), GroupSpec::symmetric(5), GroupSpec::symmetric(6), GroupSpec::gl(2),
                      GroupSpec::gl(3)}) {
        const auto v = property1(build_group(spec));
        check(v.feasible() && v.replayed, to_string(spec) + " " + to_string(v.solution.outcome));
        d << to_string(spec) << ":" << to_string(v.solution.outcome) << "/" << v.subgroups.size() << " ";
    }
    r.detail = d.str();
}

void s3_cohomology(CriterionResult& r, const AcceptanceOptions&) {
    Check check{r};
    const auto probe = character_table(build_group(GroupSpec::symmetric(3)));
    const auto model = s3_cohomology_model(probe.field);
    const auto t = character_table(model.group);
    const auto m = multiplicities(model.chi_h1, t);
    check(model.ok(), "cochain complex checks");
    check(model.dim_h1 == 4, "dim H1 = " + std::to_string(model.dim_h1));
    check(m == std::vector<std::int64_t>{1, 1, 1}, "multiplicities " + join(m));
    r.detail = "dim " + std::to_string(model.dim_h1) + " multiplicities " + join(m);
}

void property_suites(CriterionResult& r, const AcceptanceOptions& o) {
    Check check{r};
    std::vector<GroupPtr> groups;
    for (int n = 2; n <= 7; ++n) groups.push_back(build_group(GroupSpec::symmetric(n)));
    for (int q : {3, 5, 7}) groups.push_back(build_group(GroupSpec::pgl(q)));
    for (int q : {2, 3, 5}) groups.push_back(build_group(GroupSpec::gl(q)));
    groups.push_back(build_group(GroupSpec::quaternion8()));
    groups.push_back(build_group(GroupSpec::sl(5)));
    groups.push_back(g96_construction().group);

    std::size_t tables = 0, frobenius = 0;
    for (const auto& g : groups) {
        const auto t = character_table(g);
        const auto rep = check_orthogonality(t);
        ++tables;
        check(rep.ok(), "orthogonality, order " + std::to_string(g->order()) + ": " + rep.failure);
        if (g->order() > 500) continue;
        for (const auto& h : subgroups_up_to_conjugacy(g)) {
            auto hg = as_group(h);
            auto th = try_character_table(hg, t.field.prime(), 1);
            if (!th) {
                check(false, "no table for a subgroup of order " + std::to_string(h.order()));
                continue;
            }
            ++tables;
            check(check_orthogonality(*th).ok(), "orthogonality of a subgroup table");
            for (std::size_t i = 0; i < th->size(); ++i) {
                const auto ind = induce(h, th->character(i));
                for (std::size_t j = 0; j < t.size(); ++j) {
                    ++frobenius;
                    if (inner_product(ind, t.character(j)) !=
                        inner_product(th->character(i), restrict_to(h, hg, t.character(j))))
                        check(false, "Frobenius reciprocity, order " + std::to_string(g->order()));
                }
            }
        }
    }

    std::uint64_t cocycle_checks = 0;
    for (int n = 2; n <= 7; ++n) {
        auto x = involution_gset(n);
        CocycleOptions opt;
        opt.seed = o.seed + static_cast<std::uint64_t>(n);
        opt.trials = o.cocycle_trials;
        const auto rep = verify_cocycle(sn_sign_character(x, PrimeField(choose_prime(*x->group()))), opt);
        cocycle_checks += rep.checked;
        check(rep.ok(), "sign cocycle, n = " + std::to_string(n));
    }
    for (int q : {2, 3, 5}) {
        auto x = gg_gset(q);
        const auto f = PrimeField(choose_prime(*x->group(), static_cast<std::uint32_t>(q)));
        CocycleOptions opt;
        opt.mode = CocycleOptions::Mode::Exhaustive;
        for (auto rule : {CompanionRule::LexMin, CompanionRule::LexMax}) {
            const auto rep = verify_cocycle(gg_character(x, f, rule), opt);
            cocycle_checks += rep.checked;
            check(rep.ok(), "Gelfand-Graev cocycle, q = " + std::to_string(q));
        }
        check(geometric_induction(gg_character(x, f, CompanionRule::LexMin)).residues ==
                  geometric_induction(gg_character(x, f, CompanionRule::LexMax)).residues,
              "companion choice changes the character, q = " + std::to_string(q));
    }

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> entry(-12, 12), coeff(-10, 10);
    std::size_t recovered = 0;
    for (std::size_t trial = 0; trial < o.planted_instances; ++trial) {
        const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        IntMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = entry(rng);
        std::vector<BigInt> planted(rows);
        for (auto& c : planted) c = coeff(rng);
        const auto target = combine_rows(a, planted);
        const auto sol = solve_integer_combination(a, target);
        recovered += sol.outcome == LatticeSolution::Outcome::Feasible && combine_rows(a, sol.coefficients) == target;
    }
    check(recovered == o.planted_instances && recovered >= 1000,
          "planted solutions recovered " + std::to_string(recovered) + "/" + std::to_string(o.planted_instances));

    r.detail = std::to_string(tables) + " tables, " + std::to_string(frobenius) + " reciprocity pairs, " +
               std::to_string(cocycle_checks) + " cocycle checks, " + std::to_string(recovered) + " planted";
}

struct Entry {
    int id;
    const char* name;
    std::function<void(CriterionResult&, const AcceptanceOptions&)> run;
};

CriterionResult evaluate(const Entry& e, const AcceptanceOptions& o) {
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    const auto start = std::chrono::steady_clock::now();
    try {
        e.run(r, o);
    } catch (const std::exception& ex) {
        r.failures.push_back(std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = r.failures.empty();
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    const std::vector<Entry> entries = {
        {1, "Sn involution model, n = 2..7", sn_model},
        {2, "S4 example", s4_example},
        {3, "PGL(2,q) epsilon model, q = 3,5,7", pgl_model},
        {4, "Gelfand-Graev of GL(2,q), q = 2,3,5", gelfand_graev},
        {5, "fixed-point induction = stabilizer induction", induction_identity},
        {6, "counterexamples Q8, G96, SL(2,5)", counterexamples},
        {7, "Property 1 feasible for S4, S5, S6, GL(2,2), GL(2,3)", positive_property1},
        {8, "S3 cohomology model", s3_cohomology},
        {9, "property suites", property_suites},
    };
    std::vector<CriterionResult> out;
    if (options.parallel) {
        std::vector<std::future<CriterionResult>> jobs;
        for (const auto& e : entries) jobs.push_back(std::async(std::launch::async, [&e, &options] { return evaluate(e, options); }));
        for (auto& j : jobs) out.push_back(j.get());
    } else {
        for (const auto& e : entries) out.push_back(evaluate(e, options));
    }
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream ss;
    ss << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << std::fixed
       << std::setprecision(2) << r.seconds << "s)";
    if (const auto end = r.detail.find_last_not_of(' '); end != std::string::npos) ss << ' ' << r.detail.substr(0, end + 1);
    for (const auto& f : r.failures) ss << "; failed: " << f;
    return ss.str();
}

nlohmann::json to_json(const std::vector<CriterionResult>& results) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : results)
        out.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                       {"failures", r.failures}});
    return out;
}

} // namespace gmodels
