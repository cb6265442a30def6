#pragma once

// Finite groups with a canonical element ordering, conjugacy classes,
// centralizers and subgroup enumeration.
//
// Elements are addressed by their index in the canonical ordering. Index 0 is
// always the identity; the remaining elements follow the lexicographic order
// of their backend words (permutation images, normalized matrix entries,
// component indices of a product).

#include "gmodels/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace gmodels {

using Elem = std::uint32_t;
using Word = std::vector<int>;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// ---------------------------------------------------------------------------
// Specifications

struct GroupSpec {
    enum class Kind { Symmetric, Cyclic, GL, SL, PGL, Quaternion8, G96, Cayley, Semidirect };

    Kind kind = Kind::Symmetric;
    int n = 1;        // Symmetric/Cyclic: degree or order; matrix kinds: dimension (2)
    int q = 0;        // matrix kinds: field size (prime)
    std::string path; // Cayley
    std::vector<GroupSpec> parts; // Semidirect: {normal, complement}
    int action = 0;   // Semidirect: index into semidirect_actions()

    static GroupSpec symmetric(int n) { return make(Kind::Symmetric, n, 0); }
    static GroupSpec cyclic(int n) { return make(Kind::Cyclic, n, 0); }
    static GroupSpec gl(int q) { return make(Kind::GL, 2, q); }
    static GroupSpec sl(int q) { return make(Kind::SL, 2, q); }
    static GroupSpec pgl(int q) { return make(Kind::PGL, 2, q); }
    static GroupSpec quaternion8() { return make(Kind::Quaternion8, 0, 0); }
    static GroupSpec g96() { return make(Kind::G96, 0, 0); }
    static GroupSpec cayley(std::string path) {
        GroupSpec s = make(Kind::Cayley, 0, 0);
        s.path = std::move(path);
        return s;
    }
    static GroupSpec semidirect(GroupSpec normal, GroupSpec complement, int action);

    bool operator==(const GroupSpec&) const = default;

private:
    static GroupSpec make(Kind k, int n, int q) {
        GroupSpec s;
        s.kind = k;
        s.n = n;
        s.q = q;
        return s;
    }
};

/// Text form in the CLI grammar, e.g. "S(4)", "PGL(2,5)", "Semidirect(C(2),C(4),0)".
std::string to_string(const GroupSpec& spec);

/// Throws SpecError unless every GroupSpec invariant holds.
void validate(const GroupSpec& spec);

// ---------------------------------------------------------------------------
// Backends

/// Concrete realization of a group: element words and their multiplication.
class GroupBackend {
public:
    virtual ~GroupBackend() = default;
    virtual std::string tag() const = 0;
    /// Order of the group, known before enumeration (used for cap checks).
    virtual std::uint64_t order_hint() const = 0;
    virtual std::vector<Word> elements() const = 0;
    virtual Word identity() const = 0;
    virtual Word multiply(const Word& a, const Word& b) const = 0;
    virtual Word inverse(const Word& a) const = 0;
    virtual std::string describe(const Word& a) const;
    /// Optional generating set; empty means "derive one greedily".
    virtual std::vector<Word> generators() const { return {}; }
    /// Optional O(1) canonical index (valid only when identity is the
    /// lexicographically least word).
    virtual std::optional<std::size_t> rank(const Word&) const { return std::nullopt; }
};

std::shared_ptr<const GroupBackend> make_symmetric_backend(int n);
std::shared_ptr<const GroupBackend> make_cyclic_backend(int n);
std::shared_ptr<const GroupBackend> make_matrix_backend(GroupSpec::Kind kind, int q);
/// table[i][j] = index of element_i * element_j; row/column 0 must be identity.
std::shared_ptr<const GroupBackend> make_cayley_backend(std::vector<std::vector<int>> table,
                                                        std::vector<std::string> names = {});
std::shared_ptr<const GroupBackend> make_quaternion8_backend();
/// N x| K with k acting on N through the permutation action[k] of N's elements.
std::shared_ptr<const GroupBackend> make_semidirect_backend(GroupPtr normal, GroupPtr complement,
                                                            std::vector<std::vector<Elem>> action);

// ---------------------------------------------------------------------------

struct ConjugacyClassData {
    std::vector<Elem> representatives;           // minimal in canonical order
    std::vector<std::size_t> sizes;
    std::vector<std::uint32_t> class_of;         // element -> class
    std::vector<std::uint32_t> inverse_class;    // class of g -> class of g^-1
    std::vector<std::uint32_t> element_orders;   // per class
    std::vector<std::vector<Elem>> members;      // per class, ascending

    std::size_t count() const { return representatives.size(); }
};

class FiniteGroup {
public:
    static constexpr std::size_t kCayleyTableLimit = 2048;

    /// Enumerate and canonically order the backend's elements. Throws
    /// CapExceeded when the order exceeds max_order.
    static GroupPtr create(std::shared_ptr<const GroupBackend> backend, std::size_t max_order);

    std::size_t order() const { return words_.size(); }
    static constexpr Elem identity() { return 0; }

    Elem multiply(Elem a, Elem b) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
        return index_of(backend_->multiply(words_[a], words_[b]));
    }
    Elem inverse(Elem a) const { return inverses_[a]; }
    /// by * g * by^-1
    Elem conjugate(Elem g, Elem by) const { return multiply(multiply(by, g), inverses_[by]); }
    Elem power(Elem g, std::uint64_t e) const;
    std::uint32_t element_order(Elem g) const { return orders_[g]; }
    std::uint64_t exponent() const { return exponent_; }

    const Word& word(Elem g) const { return words_[g]; }
    std::optional<Elem> find(const Word& w) const;
    Elem index_of(const Word& w) const;
    std::string describe(Elem g) const { return backend_->describe(words_[g]); }

    const std::vector<Elem>& generators() const { return generators_; }
    std::string backend_tag() const { return backend_->tag(); }
    const GroupBackend& backend() const { return *backend_; }
    bool has_cayley_table() const { return !table_.empty(); }

    /// Conjugacy classes, computed on first use and then shared.
    const ConjugacyClassData& classes() const;

private:
    FiniteGroup() = default;

    std::shared_ptr<const GroupBackend> backend_;
    std::vector<Word> words_;
    std::vector<Elem> sorted_;          // element indices ordered by word
    bool rank_lookup_ = false;
    std::vector<Elem> table_;
    std::vector<Elem> inverses_;
    std::vector<std::uint32_t> orders_;
    std::uint64_t exponent_ = 1;
    std::vector<Elem> generators_;

    mutable std::once_flag classes_once_;
    mutable std::unique_ptr<ConjugacyClassData> classes_;
};

struct BuildOptions {
    std::size_t max_order = 10000;
};

/// Realize a specification. PGL elements are GL matrices scaled so that the
/// first nonzero entry (row-major) is 1.
GroupPtr build_group(const GroupSpec& spec, const BuildOptions& options = {});

/// Orbit closure of every element under conjugation by the generators.
ConjugacyClassData conjugacy_classes(const FiniteGroup& group);

struct AxiomReport {
    bool ok = true;
    bool exhaustive = true;
    std::size_t checked_triples = 0;
    std::string failure;
};

/// Identity and inverse laws exhaustively; associativity exhaustively for
/// order <= 2000, otherwise over `samples` seeded random triples.
AxiomReport verify_group_axioms(const FiniteGroup& group, std::uint64_t seed = 1,
                                std::size_t samples = 200000);

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup {
    GroupPtr parent;
    std::vector<Elem> members;    // ascending parent indices; members[0] == identity
    std::vector<Elem> generators;

    std::size_t order() const { return members.size(); }
    bool contains(Elem g) const;
    /// Position of a member in `members`, i.e. its index in as_group().
    std::optional<std::size_t> position(Elem g) const;
};

/// Smallest subgroup containing `generators` (breadth-first product closure).
Subgroup closure(const GroupPtr& group, const std::vector<Elem>& generators);

/// {h : hg = gh}
Subgroup centralizer(const GroupPtr& group, Elem g);

/// Subgroup from an explicit element set; throws CheckFailure if it is not
/// closed or misses the identity.
Subgroup make_subgroup(const GroupPtr& group, std::vector<Elem> members);

/// Subgroup from a member set already known to be a subgroup (e.g. a
/// stabilizer); only generators are derived.
Subgroup trusted_subgroup(const GroupPtr& group, std::vector<Elem> members);

/// The subgroup as a group in its own right; element i is members[i].
GroupPtr as_group(const Subgroup& h);

/// Normalizer of a subgroup in its parent.
Subgroup normalizer(const Subgroup& h);

bool are_conjugate(const Subgroup& a, const Subgroup& b);

struct SubgroupOptions {
    std::size_t max_order = 2000;
};

/// One representative per conjugacy class of subgroups, found by layered
/// extension from the trivial subgroup. Ordered by subgroup order, then by
/// member set; each representative is the least member set of its class.
std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& group,
                                                const SubgroupOptions& options = {});

// ---------------------------------------------------------------------------
// Homomorphisms and semidirect products

/// Automorphisms of a group as permutations of its element indices, sorted
/// lexicographically (the identity map first).
std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& group);

/// All homomorphisms complement -> Aut(normal), each given as the action
/// table k -> permutation of normal's elements. Enumeration order: generator
/// images in lexicographic order of automorphism index; entry 0 is trivial.
std::vector<std::vector<std::vector<Elem>>> semidirect_actions(const FiniteGroup& normal,
                                                               const FiniteGroup& complement);

} // namespace gmodels
