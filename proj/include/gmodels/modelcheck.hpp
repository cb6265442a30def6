#pragma once

// Gelfand-model verdicts, the permutation-character lattice test and the
// counterexample groups.

#include "gmodels/chartable.hpp"
#include "gmodels/group.hpp"
#include "gmodels/lattice.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gmodels {

struct GelfandVerdict {
    std::vector<std::int64_t> multiplicities;
    std::vector<std::int64_t> degrees;
    std::int64_t value_at_identity = 0;
    bool is_model = false;   // every multiplicity is 1
    bool degree_ok = false;  // sum of m_i d_i == chi(1)
};

/// Throws CheckFailure when chi is not a character.
GelfandVerdict check_gelfand(const ClassFunction& chi, const CharacterTable& t);

nlohmann::json to_json(const GelfandVerdict& v);

/// chi_{G/H} on the classes of the parent: [G:H] |C n H| / |C|.
std::vector<std::int64_t> permutation_character(const Subgroup& h);

struct Property1Verdict {
    GroupPtr group;
    std::vector<Subgroup> subgroups;  // one per conjugacy class
    IntMatrix matrix;                 // rows: permutation characters, columns: classes
    std::vector<std::int64_t> target; // Gelfand character
    LatticeSolution solution;
    bool replayed = false;            // coefficients * matrix == target, checked again here

    bool feasible() const { return solution.outcome == LatticeSolution::Outcome::Feasible; }
};

/// Decides whether the Gelfand character is an integer combination of the
/// permutation characters of all subgroups. Throws CapExceeded above the
/// subgroup enumeration cap.
Property1Verdict property1(const CharacterTable& t, const SubgroupOptions& options = {});
Property1Verdict property1(const GroupPtr& g, const SubgroupOptions& options = {});

nlohmann::json to_json(const Property1Verdict& v);

struct NaturalRow {
    std::vector<std::int64_t> multiplicities;
    std::int64_t degree = 0;
    std::size_t subgroup_order = 0; // of the first subgroup giving this row
};

/// Distinct multiplicity vectors of chi_{G/H} over all subgroup classes,
/// by decreasing degree (ties: decreasing vector).
std::vector<NaturalRow> natural_decomposition_table(const CharacterTable& t, const SubgroupOptions& options = {});

/// Published decomposition rows for SL(2,5), characters ordered
/// 1, 2, 2, 3, 3, 4, 4, 5, 6.
const std::vector<NaturalRow>& sl25_published_rows();

struct RowContainment {
    std::size_t found = 0;
    std::size_t total = 0;
    /// Relabelling of characters within equal-degree blocks under which the
    /// rows were matched: published index i -> computed index perm[i].
    std::vector<std::size_t> perm;
    std::vector<bool> row_found;
    bool ok() const { return found == total; }
};

/// Best relabelling, over permutations within blocks of equal degree, for
/// containment of `published` in `computed`.
RowContainment match_rows(const std::vector<NaturalRow>& published, const std::vector<NaturalRow>& computed,
                          const std::vector<std::int64_t>& degrees);

// ---------------------------------------------------------------------------

struct G96Construction {
    GroupSpec realization; // nested Semidirect spec
    GroupPtr group;
    std::size_t candidates = 0;      // examined before stopping
    std::size_t classes = 0;
    std::vector<std::int64_t> gelfand; // sorted
    /// Order 96, 8 classes and Gelfand multiset {30, 2, -2, 6, 6, 2, 2, 2}.
    bool exact_match = false;
};

/// Searches ((C2 x C4) x| C4) x| C3 over all action pairs, in enumeration
/// order. Returns the first exact match if there is one, otherwise the first
/// candidate of order 96 whose nonzero Gelfand values form the published
/// multiset. Computed once per process; throws CheckFailure when neither
/// exists.
const G96Construction& g96_construction();

/// The exact match; throws CheckFailure (naming the nearest candidate) when
/// the search has none.
GroupPtr construct_g96();

/// {group, claims: [{id, paper_ref, expected, computed, pass}]} per group, as
/// a JSON array. Q8, G96 and SL(2,5) run concurrently.
nlohmann::json counterexample_suite();

/// True when every claim in a suite report passes.
bool suite_passed(const nlohmann::json& report);

} // namespace gmodels
