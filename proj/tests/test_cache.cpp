#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmodels/cache.hpp"
#include "gmodels/errors.hpp"

#include <unistd.h>

#include <fstream>
#include <sstream>

using namespace gmodels;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / ("gmodels-cache-" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("spec hash is stable and distinguishes specs") {
    CHECK(spec_hash(GroupSpec::symmetric(4)) == spec_hash(GroupSpec::symmetric(4)));
    CHECK(spec_hash(GroupSpec::symmetric(4)) != spec_hash(GroupSpec::symmetric(5)));
    CHECK(spec_hash(GroupSpec::gl(3)) != spec_hash(GroupSpec::sl(3)));
    CHECK(spec_hash(GroupSpec::symmetric(4)).size() == 16);
}

TEST_CASE("round trip is byte identical") {
    TempDir tmp;
    TableCache cache(tmp.path);
    for (auto spec : {GroupSpec::symmetric(4), GroupSpec::gl(3), GroupSpec::quaternion8(), GroupSpec::pgl(5)}) {
        auto g = build_group(spec);
        CHECK_FALSE(cache.load(spec, g));
        const auto fresh = cache.table(spec, g);
        const std::string bytes = slurp(cache.path_for(spec));
        const std::string payload = table_payload(spec, fresh).dump();

        auto g2 = build_group(spec);
        const auto loaded = cache.load(spec, g2);
        REQUIRE(loaded);
        CHECK(table_payload(spec, *loaded).dump() == payload);
        CHECK(loaded->field.prime() == fresh.field.prime());
        CHECK(loaded->values == fresh.values);
        cache.store(spec, *loaded);
        CHECK(slurp(cache.path_for(spec)) == bytes);
        CHECK(cache.table(spec, g2).values == fresh.values);
    }
    for (const auto& entry : std::filesystem::directory_iterator(tmp.path))
        CHECK(entry.path().extension() == ".json");
}

TEST_CASE("corrupt, mismatched or stale entries are rejected") {
    TempDir tmp;
    TableCache cache(tmp.path);
    const auto spec = GroupSpec::symmetric(4);
    auto g = build_group(spec);
    const auto t = cache.table(spec, g);
    const auto path = cache.path_for(spec);
    auto entry = nlohmann::json::parse(slurp(path));

    auto write = [&](const nlohmann::json& j) { std::ofstream(path) << j.dump(); };

    auto bad = entry;
    bad["payload"]["values"][1][2] = (bad["payload"]["values"][1][2].get<Residue>() + 1) % t.field.prime();
    write(bad);
    CHECK_FALSE(cache.load(spec, g));
    CHECK_THROWS_AS(table_from_payload(bad["payload"], g), CheckFailure);

    bad = entry;
    bad["version"] = "gmodels-table-v0";
    write(bad);
    CHECK_FALSE(cache.load(spec, g));

    bad = entry;
    bad["payload"]["classes"][1]["size"] = 7;
    CHECK_THROWS_AS(table_from_payload(bad["payload"], g), CheckFailure);

    std::ofstream(path) << "{ truncated";
    CHECK_FALSE(cache.load(spec, g));
    CHECK(cache.table(spec, g).values == t.values);
    CHECK(cache.load(spec, g));

    CHECK_THROWS_AS(table_from_payload(entry["payload"], build_group(GroupSpec::symmetric(3))), CheckFailure);
}

TEST_CASE("default directory honours the environment") {
    ::setenv("GROUPOID_MODELS_CACHE", "/tmp/somewhere", 1);
    CHECK(TableCache::default_dir() == "/tmp/somewhere");
    ::unsetenv("GROUPOID_MODELS_CACHE");
    CHECK(TableCache::default_dir() == ".cache");
}
