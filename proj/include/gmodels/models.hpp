#pragma once

// Concrete G-sets and groupoid characters:
//   * S_n on its involutions with the inversion sign (-1)^{inv_x(g)}
//   * PGL(2,q) on symmetric and alternating forms with the isotropic-line sign
//   * GL(2,q) on Grassmann chains (u, w) with the Gelfand-Graev character
//   * S_3 on the cochains of the triangle

#include "gmodels/chartable.hpp"
#include "gmodels/gaction.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gmodels {

// ---------------------------------------------------------------------------
// Symmetric groups

struct Involution {
    Word perm;                               // 0-based images
    std::vector<std::pair<int, int>> pairs;  // (i, j), i < j, x(i) = j; sorted by i
    int t = 0;
    int f = 0;
};

/// Throws CheckFailure unless perm is a permutation with perm^2 = identity.
Involution make_involution(const Word& perm);

/// |{(i, j) in Pair(x) : g(i) > g(j)}|
int inv_count(const Involution& x, const Word& g);
int inv_count(const Word& x, const Word& g);

/// All x in S_n with x^2 = 1 (identity included) under conjugation.
GSetPtr involution_gset(int n);

/// sigma(x, g) = (-1)^{inv_x(g)} as +-1 in F_p.
GroupoidCharacter sn_sign_character(const GSetPtr& involutions, const PrimeField& f);

struct CentralizerReport {
    int t = 0;
    int f = 0;
    std::size_t order = 0;
    std::size_t expected_order = 0;   // 2^t t! f!
    bool generated_equal = false;     // the three generator families generate G_x
    bool pair_swaps_trivial = false;  // (i_k i_{k+1})(j_k j_{k+1}) -> +1
    bool flips_negative = false;      // (i_k j_k) -> -1
    bool fixed_part_trivial = false;  // S_f -> +1
    bool multiplicative = false;
    bool ok() const {
        return order == expected_order && generated_equal && pair_swaps_trivial && flips_negative &&
               fixed_part_trivial && multiplicative;
    }
};

/// Structure of the centralizer of the involution at point `x` and the
/// restriction of `sigma` to it.
CentralizerReport centralizer_structure(const GroupoidCharacter& sigma, Point x);

// ---------------------------------------------------------------------------
// PGL(2,q)

/// Projective classes of invertible M with M^T = +-M, acted on by
/// g.M = g M g^T. Points are normalized PGL words {a, b, c, d}.
GSetPtr pgl2_symmetric_gset(int q);

/// Isotropic lines {<v> : v^T M v = 0} as normalized vectors, sorted.
std::vector<Word> isotropic_lines(const Word& form, int q);

/// epsilon(g) on each stabilizer: sign of the permutation of Isotr(x_i).
IsotropyCharacter pgl2_epsilon(const GSetPtr& forms, const PrimeField& f);

/// The groupoid extension: sign of the bijection Isotr(x) -> Isotr(g.x),
/// v -> g^{-T} v, relative to the sorted line lists.
GroupoidCharacter pgl2_epsilon_groupoid(const GSetPtr& forms, const PrimeField& f);

struct PglEpsilonReport {
    int q = 0;
    std::vector<std::size_t> orbit_sizes;       // O_1, O_2, O_3
    std::vector<std::size_t> stabilizer_orders; // H_1, H_2, H_3
    std::vector<std::size_t> isotropic_counts;  // 2, 0, q+1
    bool multiplicative = false;
    bool eps1_order_two = false;
    bool eps1_kernel_split_torus = false;  // ker = T_1 cyclic of order q-1
    bool h1_normalizes_t1 = false;         // H_1 = N_G(T_1)
    bool eps2_trivial = false;
    bool h2_normalizes_t2 = false;         // H_2 = N_G(T_2), T_2 cyclic of order q+1
    bool eps3_det_mod_squares = false;
    bool eps3_line_sign = false;           // sign of g on all q+1 lines
    bool ok() const;
};

PglEpsilonReport verify_pgl2_epsilon(const IsotropyCharacter& eps, int q);

// ---------------------------------------------------------------------------
// GL(2,q) Gelfand-Graev

enum class CompanionRule { LexMin, LexMax };

/// Grassmann chains (u1, u2, w), u != 0, w != 0, with g.(u, w) = (gu, det(g) w).
GSetPtr gg_gset(int q);

/// v with u1 v2 - u2 v1 = w, lexicographically least (or greatest).
std::pair<int, int> companion(int u1, int u2, int w, int q, CompanionRule rule);

/// psi~(x, g) = zeta^b where g v = v' + b u'. Needs q | p - 1.
GroupoidCharacter gg_character(const GSetPtr& chains, const PrimeField& f,
                               CompanionRule rule = CompanionRule::LexMin);

/// {[[1, b], [0, 1]]}
Subgroup unipotent_subgroup(const GroupPtr& gl2);

/// Ind_U^G of u_b -> zeta^b.
ClassFunction classical_gg_character(const GroupPtr& gl2, const PrimeField& f);

// ---------------------------------------------------------------------------
// S_3 triangle cochains

struct S3CohomologyModel {
    GroupPtr group;
    ClassFunction chi_point;    // C_{-1}
    ClassFunction chi_vertices; // C_0
    ClassFunction chi_edges;    // C_1 (oriented edges)
    ClassFunction chi_h1;       // exact
    std::size_t rank_delta_minus1 = 0;
    std::size_t rank_delta0 = 0;
    bool composite_zero = false;  // delta_0 delta_{-1} = 0
    bool exact_at_c0 = false;     // ker delta_0 = im delta_{-1}
    bool equivariant = false;     // coboundaries commute with the action
    std::int64_t dim_h1 = 0;
    bool ok() const { return composite_zero && exact_at_c0 && equivariant && rank_delta_minus1 == 1; }
};

S3CohomologyModel s3_cohomology_model(const PrimeField& f);

} // namespace gmodels
