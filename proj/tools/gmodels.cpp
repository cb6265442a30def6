// gmodels: command-line front end.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 bad command line or
// group spec, 3 resource cap exceeded.

#include "gmodels/acceptance.hpp"
#include "gmodels/cache.hpp"
#include "gmodels/errors.hpp"
#include "gmodels/modelcheck.hpp"
#include "gmodels/models.hpp"
#include "gmodels/spec_text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace gmodels;
using nlohmann::json;

namespace {

struct Settings {
    bool json = false;
    std::string cache_dir;
    std::uint64_t seed = 1;
    std::size_t max_order = 10000;
};

struct Outcome {
    json data;
    std::string text;
    bool ok = true;
};

std::string row_text(const std::vector<std::int64_t>& v) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? " " : "") << v[i];
    return ss.str();
}

class Runner {
public:
    explicit Runner(const Settings& s)
        : s_(s), cache_(s.cache_dir.empty() ? TableCache::default_dir() : std::filesystem::path(s.cache_dir)) {}

    GroupPtr group(const GroupSpec& spec) const {
        BuildOptions opt;
        opt.max_order = s_.max_order;
        return build_group(spec, opt);
    }

    CharacterTable table(const GroupSpec& spec, const GroupPtr& g, std::uint32_t aux = 1) const {
        TableOptions opt;
        opt.aux_root_order = aux;
        return cache_.table(spec, g, opt);
    }

    SubgroupOptions subgroup_options() const {
        SubgroupOptions opt;
        opt.max_order = std::min<std::size_t>(opt.max_order, s_.max_order);
        return opt;
    }

    Outcome info(const std::string& text) const {
        const auto spec = parse_group_spec(text);
        const auto g = group(spec);
        Outcome o;
        o.data = {{"spec", to_string(spec)},
                  {"order", g->order()},
                  {"classes", g->classes().count()},
                  {"exponent", g->exponent()}};
        std::ostringstream ss;
        ss << to_string(spec) << "\norder " << g->order() << "\nclasses " << g->classes().count() << "\nexponent "
           << g->exponent() << '\n';
        o.text = ss.str();
        return o;
    }

    Outcome chartab(const std::string& text) const {
        const auto spec = parse_group_spec(text);
        const auto g = group(spec);
        const auto t = table(spec, g);
        Outcome o;
        o.data = table_payload(spec, t);
        const auto& cls = g->classes();
        std::ostringstream ss;
        ss << to_string(spec) << " over F_" << t.field.prime() << '\n';
        ss << "degrees " << row_text(t.degrees) << '\n';
        ss << "class sizes " << row_text(std::vector<std::int64_t>(cls.sizes.begin(), cls.sizes.end())) << '\n';
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::vector<std::int64_t> row;
            for (std::size_t j = 0; j < t.size(); ++j) row.push_back(t.values(i, j));
            ss << "chi" << i << ": " << row_text(row) << '\n';
        }
        o.text = ss.str();
        return o;
    }

    Outcome verdict(const std::string& name, const ClassFunction& chi, const CharacterTable& t, json extra,
                    bool checks_ok) const {
        const auto v = check_gelfand(chi, t);
        Outcome o;
        std::vector<std::int64_t> values;
        for (std::size_t c = 0; c < chi.size(); ++c) values.push_back(t.field.lift(chi.value_mod(t.field, c)));
        o.data = {{"model", name}, {"character", values}, {"verdict", to_json(v)}, {"checks", std::move(extra)}};
        o.ok = checks_ok;
        std::ostringstream ss;
        ss << name << "\ncharacter " << row_text(values) << "\nmultiplicities " << row_text(v.multiplicities)
           << "\nis_model " << (v.is_model ? "true" : "false") << "\nchecks " << (checks_ok ? "pass" : "FAIL")
           << '\n';
        o.text = ss.str();
        return o;
    }

    Outcome model_sn(int n) const {
        auto x = involution_gset(n);
        const auto t = table(GroupSpec::symmetric(n), x->group());
        const auto sigma = sn_sign_character(x, t.field);
        CocycleOptions opt;
        opt.seed = s_.seed;
        const auto cyc = verify_cocycle(sigma, opt);
        const auto chi = geometric_induction(sigma);
        const bool model = check_gelfand(chi, t).is_model;
        return verdict("S(" + std::to_string(n) + ") involutions", chi, t, {{"cocycle", to_json(cyc)}},
                       cyc.ok() && model);
    }

    Outcome model_pgl2(int q) const {
        auto x = pgl2_symmetric_gset(q);
        const auto t = table(GroupSpec::pgl(q), x->group());
        const auto eps = pgl2_epsilon(x, t.field);
        const auto rep = verify_pgl2_epsilon(eps, q);
        const auto chi = stabilizer_induction_sum(eps);
        const bool model = check_gelfand(chi, t).is_model;
        json checks{{"orbit_sizes", rep.orbit_sizes},
                    {"stabilizer_orders", rep.stabilizer_orders},
                    {"isotropic_counts", rep.isotropic_counts},
                    {"epsilon", rep.ok()}};
        return verdict("PGL(2," + std::to_string(q) + ") forms", chi, t, checks, rep.ok() && model);
    }

    Outcome model_gg(int q) const {
        auto x = gg_gset(q);
        const auto t = table(GroupSpec::gl(q), x->group(), static_cast<std::uint32_t>(q));
        const auto psi = gg_character(x, t.field);
        CocycleOptions opt;
        opt.seed = s_.seed;
        const auto cyc = verify_cocycle(psi, opt);
        const auto chi = geometric_induction(psi);
        const bool classical = chi.residues == classical_gg_character(x->group(), t.field).residues;
        const auto m = multiplicities(chi, t);
        const bool free = std::all_of(m.begin(), m.end(), [](std::int64_t v) { return v <= 1; });
        return verdict("GL(2," + std::to_string(q) + ") Gelfand-Graev", chi, t,
                       {{"cocycle", to_json(cyc)}, {"equals_classical", classical}, {"multiplicity_free", free}},
                       cyc.ok() && classical && free);
    }

    Outcome model_s3() const {
        const auto spec = GroupSpec::symmetric(3);
        const auto probe = character_table(build_group(spec));
        const auto m = s3_cohomology_model(probe.field);
        const auto t = table(spec, m.group);
        const bool model = check_gelfand(m.chi_h1, t).is_model;
        return verdict("S(3) triangle cochains", to_modular(m.chi_h1, t.field), t,
                       {{"dim_h1", m.dim_h1}, {"complex", m.ok()}}, m.ok() && model);
    }

    Outcome property1_check(const std::string& text) const {
        const auto spec = parse_group_spec(text);
        const auto g = group(spec);
        const auto opt = subgroup_options();
        if (g->order() > opt.max_order)
            throw CapExceeded("property1: order " + std::to_string(g->order()) + " exceeds cap " +
                              std::to_string(opt.max_order));
        const auto v = property1(table(spec, g), opt);
        Outcome o;
        o.data = to_json(v);
        o.data["spec"] = to_string(spec);
        o.ok = v.feasible();
        std::ostringstream ss;
        ss << to_string(spec) << "\nsubgroup classes " << v.subgroups.size() << "\ntarget " << row_text(v.target)
           << "\noutcome " << to_string(v.solution.outcome) << '\n';
        if (v.feasible()) {
            ss << "coefficients";
            for (const auto& c : v.solution.coefficients) ss << ' ' << c;
            ss << '\n';
        } else {
            ss << "witness " << v.solution.witness << '\n';
        }
        o.text = ss.str();
        return o;
    }

    Outcome counterexamples() const {
        Outcome o;
        o.data = counterexample_suite();
        o.ok = suite_passed(o.data);
        std::ostringstream ss;
        for (const auto& g : o.data)
            for (const auto& c : g.at("claims"))
                ss << (c.at("pass").get<bool>() ? "PASS " : "FAIL ") << c.at("id").get<std::string>() << ": expected "
                   << c.at("expected").dump() << ", computed " << c.at("computed").dump() << '\n';
        o.text = ss.str();
        return o;
    }

    Outcome acceptance() const {
        AcceptanceOptions opt;
        opt.seed = s_.seed;
        const auto results = run_acceptance(opt);
        Outcome o;
        o.data = to_json(results);
        std::ostringstream ss;
        for (const auto& r : results) {
            ss << format_line(r) << '\n';
            o.ok = o.ok && r.pass;
        }
        o.text = ss.str();
        return o;
    }

private:
    Settings s_;
    TableCache cache_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric induction, Gelfand models and Property-1 checks for finite groups"};
    app.require_subcommand(1);
    Settings s;
    app.add_flag("--json", s.json, "JSON output");
    app.add_option("--cache", s.cache_dir, "character-table cache directory (default $GROUPOID_MODELS_CACHE or .cache)");
    app.add_option("--seed", s.seed, "seed for sampled checks");
    app.add_option("--max-order", s.max_order, "largest group order to enumerate");

    std::string spec_text;
    int param = 0;
    std::function<Outcome(const Runner&)> action;

    auto* info = app.add_subcommand("info", "order, classes and exponent of a group");
    info->add_option("spec", spec_text, "group spec, e.g. S(4), PGL(2,5)")->required();
    info->callback([&] { action = [&](const Runner& r) { return r.info(spec_text); }; });

    auto* chartab = app.add_subcommand("chartab", "character table modulo the verification prime");
    chartab->add_option("spec", spec_text)->required();
    chartab->callback([&] { action = [&](const Runner& r) { return r.chartab(spec_text); }; });

    auto* model = app.add_subcommand("model", "model character and Gelfand verdict");
    model->require_subcommand(1);
    auto* sn = model->add_subcommand("sn", "S_n on its involutions");
    sn->add_option("n", param)->required()->check(CLI::Range(2, 8));
    sn->callback([&] { action = [&](const Runner& r) { return r.model_sn(param); }; });
    auto* pgl2 = model->add_subcommand("pgl2", "PGL(2,q) on forms");
    pgl2->add_option("q", param)->required();
    pgl2->callback([&] { action = [&](const Runner& r) { return r.model_pgl2(param); }; });
    auto* gg = model->add_subcommand("gg", "Gelfand-Graev character of GL(2,q)");
    gg->add_option("q", param)->required();
    gg->callback([&] { action = [&](const Runner& r) { return r.model_gg(param); }; });
    auto* s3 = model->add_subcommand("s3cohom", "S_3 triangle cochains");
    s3->callback([&] { action = [&](const Runner& r) { return r.model_s3(); }; });

    auto* check = app.add_subcommand("check", "Property-1 lattice test");
    check->require_subcommand(1);
    auto* p1 = check->add_subcommand("property1", "Gelfand character as an integer combination of permutation characters");
    p1->add_option("spec", spec_text)->required();
    p1->callback([&] { action = [&](const Runner& r) { return r.property1_check(spec_text); }; });

    auto* suite = app.add_subcommand("suite", "verification suites");
    suite->require_subcommand(1);
    suite->add_subcommand("counterexamples", "Q8, G96 and SL(2,5)")->callback([&] {
        action = [](const Runner& r) { return r.counterexamples(); };
    });
    suite->add_subcommand("paper", "every acceptance criterion")->callback([&] {
        action = [](const Runner& r) { return r.acceptance(); };
    });

    for (auto* sub : {info, chartab, model, sn, pgl2, gg, s3, check, p1, suite}) sub->fallthrough();
    for (auto* sub : suite->get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Runner runner(s);
        const Outcome o = action(runner);
        if (s.json)
            std::cout << o.data.dump(2) << '\n';
        else
            std::cout << o.text;
        return o.ok ? 0 : 1;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    }
}
