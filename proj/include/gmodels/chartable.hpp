#pragma once

// Character tables over F_p and class-function arithmetic.
//
// Irreducible characters are computed as simultaneous eigenvectors of the
// class-sum matrices (Dixon-Schneider) modulo a prime p with
// p = 1 (mod exponent) and p > 2|G|. Every integer quantity needed downstream
// (multiplicities, rational character values) lies in (-p/2, p/2) and is
// recovered exactly by the symmetric lift.

#include "gmodels/group.hpp"
#include "gmodels/linalg.hpp"
#include "gmodels/modular.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gmodels {

/// Values indexed by the conjugacy classes of `group`. Modular form keeps
/// residues mod `prime`; exact form (prime == 0) keeps rational integers.
struct ClassFunction {
    GroupPtr group;
    std::uint32_t prime = 0;
    std::vector<Residue> residues;
    std::vector<std::int64_t> integers;

    bool is_exact() const { return prime == 0; }
    std::size_t size() const { return is_exact() ? integers.size() : residues.size(); }
    Residue value_mod(const PrimeField& f, std::size_t cls) const {
        return is_exact() ? f.reduce(integers[cls]) : f.reduce(residues[cls]);
    }
    PrimeField field() const { return PrimeField(prime); }

    static ClassFunction modular(GroupPtr g, const PrimeField& f, std::vector<Residue> values);
    static ClassFunction exact(GroupPtr g, std::vector<std::int64_t> values);
};

/// Exact form reduced modulo `f`.
ClassFunction to_modular(const ClassFunction& chi, const PrimeField& f);

/// Symmetric lift to exact integers. Throws CheckFailure if some lifted value
/// exceeds `bound` in absolute value.
ClassFunction lift_exact(const ClassFunction& chi, std::int64_t bound);

ClassFunction trivial_character(const GroupPtr& g, const PrimeField& f);
ClassFunction regular_character(const GroupPtr& g, const PrimeField& f);

/// Pointwise sum and difference (both operands in the same domain).
ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
bool same_values(const ClassFunction& a, const ClassFunction& b);

// ---------------------------------------------------------------------------

/// Smallest prime p = 1 (mod lcm(exponent, aux_root_order)) with p > 2|G|.
std::uint32_t choose_prime(const FiniteGroup& g, std::uint32_t aux_root_order = 1);

/// Next admissible prime after `p` for the same group and root order.
std::uint32_t next_admissible_prime(const FiniteGroup& g, std::uint32_t aux_root_order, std::uint32_t p);

/// a(i, j, l) = #{(x, y) in C_i x C_j : xy = z_l} for the representative z_l.
class ClassTensor {
public:
    ClassTensor() = default;
    explicit ClassTensor(std::size_t k) : k_(k), data_(k * k * k, 0) {}
    std::size_t classes() const { return k_; }
    std::uint64_t& operator()(std::size_t i, std::size_t j, std::size_t l) { return data_[(i * k_ + j) * k_ + l]; }
    std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t l) const {
        return data_[(i * k_ + j) * k_ + l];
    }

private:
    std::size_t k_ = 0;
    std::vector<std::uint64_t> data_;
};

ClassTensor class_tensor(const FiniteGroup& g);

struct CharacterTable {
    GroupPtr group;
    PrimeField field;
    std::uint32_t aux_root_order = 1;
    std::vector<std::int64_t> degrees;
    ModMatrix values; // row = irreducible, column = class

    std::size_t size() const { return degrees.size(); }
    ClassFunction character(std::size_t i) const;
};

struct TableOptions {
    std::uint32_t aux_root_order = 1;
    /// Start the prime search here instead of at choose_prime().
    std::optional<std::uint32_t> prime;
    int max_prime_attempts = 8;
};

/// Rows sorted by degree, then lexicographically by residue vector; row 0 is
/// the trivial character and column 0 the identity class.
CharacterTable character_table(const GroupPtr& g, const TableOptions& options = {});

/// Table from a given prime only; nullopt when eigenspace splitting fails.
std::optional<CharacterTable> try_character_table(const GroupPtr& g, std::uint32_t prime,
                                                  std::uint32_t aux_root_order);

struct OrthogonalityReport {
    bool rows_ok = true;
    bool columns_ok = true;
    bool degrees_ok = true;
    std::string failure;
    bool ok() const { return rows_ok && columns_ok && degrees_ok; }
};

OrthogonalityReport check_orthogonality(const CharacterTable& t);

// ---------------------------------------------------------------------------

/// (1/|G|) sum_j |C_j| chi(C_j) psi(C_j^-1), lifted to the symmetric range
/// (modular) or computed exactly (both exact; throws if not integral).
std::int64_t inner_product(const ClassFunction& chi, const ClassFunction& psi);

/// Induction from H; `theta` lives on as_group(H) (element i = H.members[i]).
ClassFunction induce(const Subgroup& h, const ClassFunction& theta);

/// Restriction to H, as a class function on `h_group` = as_group(H).
ClassFunction restrict_to(const Subgroup& h, const GroupPtr& h_group, const ClassFunction& chi);

/// <chi, chi_i> for every irreducible. Throws CheckFailure on a negative
/// multiplicity or a degree mismatch (chi was not a character).
std::vector<std::int64_t> multiplicities(const ClassFunction& chi, const CharacterTable& t);

/// Sum of all irreducible characters, exact.
ClassFunction gelfand_character(const CharacterTable& t);

} // namespace gmodels
