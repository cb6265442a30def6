#include "gmodels/cache.hpp"

#include "gmodels/errors.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace gmodels {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void hash_files(const GroupSpec& spec, std::uint64_t& h) {
    if (spec.kind == GroupSpec::Kind::Cayley) h = fnv1a(h, read_file(spec.path));
    for (const auto& p : spec.parts) hash_files(p, h);
}

} // namespace

std::string spec_hash(const GroupSpec& spec) {
    std::uint64_t h = fnv1a(14695981039346656037ull, to_string(spec));
    hash_files(spec, h);
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << h;
    return ss.str();
}

nlohmann::json table_payload(const GroupSpec& spec, const CharacterTable& t) {
    const FiniteGroup& g = *t.group;
    const auto& cls = g.classes();
    nlohmann::json classes = nlohmann::json::array();
    for (std::size_t c = 0; c < cls.count(); ++c)
        classes.push_back({{"rep_description", g.describe(cls.representatives[c])},
                           {"size", cls.sizes[c]},
                           {"element_order", cls.element_orders[c]}});
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t i = 0; i < t.values.rows(); ++i) {
        auto row = t.values.row(i);
        values.push_back(std::vector<Residue>(row.begin(), row.end()));
    }
    return {{"group_spec", to_string(spec)},
            {"prime", t.field.prime()},
            {"aux_root_order", t.aux_root_order},
            {"exponent", g.exponent()},
            {"classes", classes},
            {"degrees", t.degrees},
            {"values", values}};
}

CharacterTable table_from_payload(const nlohmann::json& payload, const GroupPtr& g) {
    const auto& cls = g->classes();
    const auto& classes = payload.at("classes");
    if (classes.size() != cls.count()) throw CheckFailure("cached table: class count differs");
    for (std::size_t c = 0; c < cls.count(); ++c) {
        if (classes[c].at("size").get<std::size_t>() != cls.sizes[c] ||
            classes[c].at("element_order").get<std::uint32_t>() != cls.element_orders[c] ||
            classes[c].at("rep_description").get<std::string>() != g->describe(cls.representatives[c]))
            throw CheckFailure("cached table: class " + std::to_string(c) + " differs");
    }
    if (payload.at("exponent").get<std::uint64_t>() != g->exponent()) throw CheckFailure("cached table: exponent");

    CharacterTable t{g, PrimeField(payload.at("prime").get<std::uint32_t>()),
                     payload.at("aux_root_order").get<std::uint32_t>(),
                     payload.at("degrees").get<std::vector<std::int64_t>>(), ModMatrix()};
    const auto& values = payload.at("values");
    if (values.size() != cls.count() || t.degrees.size() != cls.count())
        throw CheckFailure("cached table: not square");
    t.values = ModMatrix(cls.count(), cls.count());
    for (std::size_t i = 0; i < cls.count(); ++i) {
        const auto row = values[i].get<std::vector<Residue>>();
        if (row.size() != cls.count()) throw CheckFailure("cached table: ragged row");
        for (std::size_t j = 0; j < cls.count(); ++j) {
            if (row[j] >= t.field.prime()) throw CheckFailure("cached table: residue out of range");
            t.values(i, j) = row[j];
        }
    }
    if (auto rep = check_orthogonality(t); !rep.ok()) throw CheckFailure("cached table: " + rep.failure);
    return t;
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::default_dir() {
    if (const char* env = std::getenv("GROUPOID_MODELS_CACHE"); env && *env) return env;
    return ".cache";
}

std::filesystem::path TableCache::path_for(const GroupSpec& spec) const {
    return dir_ / ("table-" + spec_hash(spec) + ".json");
}

std::optional<CharacterTable> TableCache::load(const GroupSpec& spec, const GroupPtr& g) const {
    const auto path = path_for(spec);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    try {
        const auto entry = nlohmann::json::parse(read_file(path));
        if (entry.at("version") != kCacheVersion || entry.at("spec_hash") != spec_hash(spec)) return std::nullopt;
        if (entry.at("payload").at("group_spec") != to_string(spec)) return std::nullopt;
        return table_from_payload(entry.at("payload"), g);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void TableCache::store(const GroupSpec& spec, const CharacterTable& t) const {
    static std::atomic<unsigned> counter{0};
    std::filesystem::create_directories(dir_);
    const nlohmann::json entry{{"version", kCacheVersion}, {"spec_hash", spec_hash(spec)},
                               {"payload", table_payload(spec, t)}};
    const auto final_path = path_for(spec);
    auto tmp = final_path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << entry.dump(1) << '\n';
        if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, final_path);
}

CharacterTable TableCache::table(const GroupSpec& spec, const GroupPtr& g, const TableOptions& options) const {
    if (auto t = load(spec, g); t && t->aux_root_order == options.aux_root_order) return *t;
    auto t = character_table(g, options);
    store(spec, t);
    return t;
}

} // namespace gmodels
