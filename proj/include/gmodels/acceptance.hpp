#pragma once

// The nine acceptance criteria, each evaluated exactly and reported with
// the facts it was decided on.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gmodels {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> failures; // failed sub-checks
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 1;
    std::uint64_t cocycle_trials = 1'000'000;
    std::size_t planted_instances = 1000;
    bool parallel = true;
};

/// Criteria 1..9 in order. Exceptions inside a criterion become failures.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "criterion N: PASS|FAIL <name> (<seconds>s) <detail>"
std::string format_line(const CriterionResult& r);

nlohmann::json to_json(const std::vector<CriterionResult>& results);

} // namespace gmodels
