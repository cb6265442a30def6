#pragma once

// G-sets, action groupoids and their one-dimensional characters.
//
// Left actions throughout: the arrow (x, g) goes from x to g.x, and a
// groupoid character obeys sigma(x, hg) = sigma(x, g) * sigma(g.x, h).

#include "gmodels/chartable.hpp"
#include "gmodels/group.hpp"
#include "gmodels/modular.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace gmodels {

using Point = std::uint32_t;

class GSet;
using GSetPtr = std::shared_ptr<const GSet>;

class GSet {
public:
    using WordAction = std::function<Word(Elem, const Word&)>;

    /// Points are sorted and deduplicated; `act` must map points to points.
    /// Throws CheckFailure when some image is not a point.
    static GSetPtr create(GroupPtr group, std::vector<Word> points, WordAction act);

    const GroupPtr& group() const { return group_; }
    std::size_t size() const { return points_.size(); }
    const Word& point(Point x) const { return points_[x]; }
    std::optional<Point> find(const Word& w) const;

    Point act(Elem g, Point x) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(g) * size() + x];
        return *find(act_(g, points_[x]));
    }

    const std::vector<std::vector<Point>>& orbits() const { return orbits_; }
    std::uint32_t orbit_of(Point x) const { return orbit_of_[x]; }
    /// Least point of each orbit.
    Point representative(std::size_t orbit) const { return orbits_[orbit][0]; }
    const Subgroup& stabilizer(std::size_t orbit) const { return stabilizers_[orbit]; }
    /// An element t with t . representative(orbit_of(x)) == x; identity at representatives.
    Elem transversal(Point x) const { return transversal_[x]; }

private:
    GSet() = default;

    GroupPtr group_;
    std::vector<Word> points_;
    WordAction act_;
    std::vector<Point> table_;
    std::vector<std::vector<Point>> orbits_;
    std::vector<std::uint32_t> orbit_of_;
    std::vector<Subgroup> stabilizers_;
    std::vector<Elem> transversal_;
};

struct ActionReport {
    bool ok = true;
    bool exhaustive = true;
    std::size_t checked = 0;
    std::string failure;
};

/// identity.x = x and g.(s.x) = (gs).x for generators s; exhaustive over
/// (g, x) when |G||X| <= 10^6, otherwise over `samples` seeded random pairs.
/// The generator form implies the full law by induction on word length.
ActionReport verify_action(const GSet& x, std::uint64_t seed = 1, std::size_t samples = 200000);

/// Orbit sizes sum to |X| and |orbit| * |stabilizer| = |G|.
bool orbit_stabilizer_consistent(const GSet& x);

// ---------------------------------------------------------------------------

struct GroupoidCharacter {
    GSetPtr gset;
    PrimeField field;
    /// Values are roots of unity of this order; 0 = any nonzero scalar.
    std::uint32_t root_order = 1;
    /// Value on the arrow (x, g): x -> g.x
    std::function<Residue(Point, Elem)> value;
};

/// Values tabulated into memory (|X| x |G| residues).
GroupoidCharacter tabulate(const GroupoidCharacter& sigma);

struct CocycleViolation {
    Point x;
    Elem g;
    Elem h;
};

struct CocycleReport {
    enum class Mode { Exhaustive, Sampled };
    Mode mode = Mode::Exhaustive;
    std::uint64_t checked = 0;
    std::vector<CocycleViolation> violations; // first few
    std::uint64_t violation_count = 0;
    bool identity_ok = true;
    bool roots_ok = true;
    bool ok() const { return violation_count == 0 && identity_ok && roots_ok; }
};

struct CocycleOptions {
    enum class Mode { Auto, Exhaustive, Sampled };
    Mode mode = Mode::Auto;
    std::uint64_t seed = 1;
    std::uint64_t trials = 1'000'000;
    std::uint64_t exhaustive_limit = 10'000'000; // |X||G|^2 threshold for Auto
    std::size_t max_reported = 16;
};

CocycleReport verify_cocycle(const GroupoidCharacter& sigma, const CocycleOptions& options = {});

nlohmann::json to_json(const CocycleReport& report);

/// chi(g) = sum over x with g.x = x of sigma(x, g).
ClassFunction geometric_induction(const GroupoidCharacter& sigma);

// ---------------------------------------------------------------------------

struct IsotropyCharacter {
    struct Orbit {
        Point representative;
        Subgroup stabilizer;
        std::vector<Residue> values; // indexed by position in stabilizer.members
    };
    GSetPtr gset;
    PrimeField field;
    std::vector<Orbit> orbits;
};

IsotropyCharacter restrict_to_isotropy(const GroupoidCharacter& sigma);

/// Each stabilizer map sends the identity to 1 and is multiplicative.
bool is_multiplicative(const IsotropyCharacter::Orbit& orbit, const PrimeField& f);

/// The stabilizer map as a class function on as_group(stabilizer). Throws
/// CheckFailure if it is not a linear character.
ClassFunction isotropy_class_function(const IsotropyCharacter::Orbit& orbit, const PrimeField& f);

/// sum_i Ind_{H_i}^G(theta_i)
ClassFunction stabilizer_induction_sum(const IsotropyCharacter& iota);

/// A groupoid character with the given isotropy restrictions and arbitrary
/// nonzero scalars alpha_x away from the representatives:
/// sigma(x, g) = alpha_{g.x} * theta(t_{g.x}^-1 g t_x) / alpha_x.
GroupoidCharacter extend_isotropy(const IsotropyCharacter& iota, std::uint64_t seed);

/// sigma == 1 on every arrow.
GroupoidCharacter trivial_groupoid_character(const GSetPtr& x, const PrimeField& f);

} // namespace gmodels
