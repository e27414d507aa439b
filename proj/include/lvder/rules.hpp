#pragma once

#include "lvder/derivation.hpp"
#include "lvder/graph.hpp"

#include <string>
#include <vector>

namespace lvder {

/// Homogeneous linear conditions on the vectorized coefficients λ, each
/// tagged with the rule instance that produced it.
struct ConstraintSet {
    std::size_t ambient_dim = 0;
    RatMatrix rows;
    std::vector<std::string> provenance;

    ConstraintSet() = default;
    explicit ConstraintSet(std::size_t n) : ambient_dim(n * n), rows(0, n * n) {}

    [[nodiscard]] std::size_t size() const { return rows.rows(); }
    void add(std::span<const Rational> row, std::string tag);
    void merge(const ConstraintSet& other);
};

/// λ_tk = 0 for t outside N_k, and Σ_t λ_tk = 0 for every k.
ConstraintSet support_constraints(const LVAlgebra& a);

/// Per dashed pair {i,j} with I = N_i∩N_j, J = N_i∖N_j, K = N_j∖N_i:
/// D(e_i) and D(e_j) agree on I; each of the three blocks has weight zero;
/// a block indexed by at most one vertex vanishes.
ConstraintSet dashed_pair_constraints(const LVAlgebra& a);

/// Cross-weight triangle: {b,c} solid, {a,b} and {a,c} dashed with
/// α_ab != α_ac forces λ_cb = 0. Applied to every ordered triple.
ConstraintSet rule_g1(const LVAlgebra& a);

/// Apex triangle: {a,b} and {a,c} solid, {b,c} dashed forces λ_ab = λ_ac.
ConstraintSet rule_g2(const LVAlgebra& a);

/// All four families, in the order above.
std::vector<ConstraintSet> all_rules(const LVAlgebra& a);

/// Common kernel of every supplied row. With no rows this is the whole
/// space. Throws DimensionError on mixed ambient dimensions.
Subspace constrained_space(std::span<const ConstraintSet> sets);
Subspace constrained_space(const ConstraintSet& cs);
Subspace constrained_space(std::initializer_list<ConstraintSet> sets);

/// For each dashed pair {i,j} the exact derivations must satisfy: every t in
/// the support of the J-block of D(e_i) has α_tj = α_ij, and every t in the
/// support of the K-block of D(e_j) has α_it = α_ij. Returns one message per
/// violation; an empty result means the algebra is consistent with that.
std::vector<std::string> dashed_pair_consistency(const LVAlgebra& a, const DerivationSpace& der);

}  // namespace lvder
