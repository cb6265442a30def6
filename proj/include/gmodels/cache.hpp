#pragma once

// Persistent character-table cache: one JSON file per group spec.

#include "gmodels/chartable.hpp"
#include "gmodels/group.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace gmodels {

inline constexpr const char* kCacheVersion = "gmodels-table-v1";

/// Stable 64-bit FNV-1a of the spec text (plus file contents for Cayley
/// specs), as 16 hex digits.
std::string spec_hash(const GroupSpec& spec);

/// {group_spec, prime, aux_root_order, exponent, classes: [{rep_description,
/// size, element_order}], degrees, values}
nlohmann::json table_payload(const GroupSpec& spec, const CharacterTable& t);

/// Rebuild a table on `g` from a payload. Throws CheckFailure when the
/// payload does not describe g's classes or fails orthogonality.
CharacterTable table_from_payload(const nlohmann::json& payload, const GroupPtr& g);

class TableCache {
public:
    explicit TableCache(std::filesystem::path dir);

    /// $GROUPOID_MODELS_CACHE, else ".cache".
    static std::filesystem::path default_dir();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const GroupSpec& spec) const;

    /// nullopt when absent, unreadable, of another version, or invalid.
    std::optional<CharacterTable> load(const GroupSpec& spec, const GroupPtr& g) const;

    /// Written to a temporary file in the same directory, then renamed.
    void store(const GroupSpec& spec, const CharacterTable& t) const;

    /// Cached table, or a fresh one which is then stored.
    CharacterTable table(const GroupSpec& spec, const GroupPtr& g, const TableOptions& options = {}) const;

private:
    std::filesystem::path dir_;
};

} // namespace gmodels
