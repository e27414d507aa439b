#pragma once

#include "lvder/derivation.hpp"
#include "lvder/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lvder {

/// Claimed shape of Der(A): f(e_k) = 0 on `kernel`, equal images inside each
/// group, and column k inside per_index[k] if present, otherwise inside
/// `image` if present.
struct DerivationSpec {
    IndexSet kernel;
    std::vector<IndexSet> equal_groups;
    std::optional<std::vector<Element>> image;
    std::map<std::size_t, std::vector<Element>> per_index;
};

/// Human-readable form, e.g. "e_1,e_4 in ker; Im f in <e_2-e_3, e_2-e_5>".
std::string describe(const DerivationSpec& s);

/// Subspace of Q^{n²} (vectorized λ) cut out by the claim.
Subspace spec_subspace(const DerivationSpec& s, std::size_t n);

enum class LabelKind {
    Letter,         ///< a letter drawn on the edge (alpha, beta, gamma, delta)
    ImpliedLetter,  ///< undrawn edge that must carry a letter's weight
    Tie,            ///< undrawn edges that must share a weight among themselves
    Free,           ///< undrawn edge with its own generic weight
};

/// Dashed edge {i,j} (0-based) with α_ij equal to the label's value.
struct DashedEdge {
    std::size_t i;
    std::size_t j;
    LabelKind kind;
    std::string label;  ///< letter or tie name; empty for Free
};

struct CaseTemplate {
    std::string name;
    std::size_t n = 5;
    std::vector<DashedEdge> dashed;
    DerivationSpec claim;
    /// The table cell read literally, when it differs from `claim`.
    std::optional<DerivationSpec> literal;

    [[nodiscard]] const DerivationSpec& spec(bool literal_table) const {
        return literal_table && literal ? *literal : claim;
    }
    [[nodiscard]] bool has_undrawn_constraints() const;
};

/// The 22 five-dimensional cases M1..M22.
const std::vector<CaseTemplate>& builtin_cases();
/// Looks a case up by name ("M7"); nullptr if unknown.
const CaseTemplate* find_case(const std::string& name);

/// k-th value of the instantiation pool: 1/3, 1/4, 1/5, 1/7, 2/7, 3/8, 2/9,
/// 5/11, then every reduced p/q < 1/2 with q >= 12 not already listed, by
/// (q, p). All values lie strictly below 1/2.
Rational pool_value(std::size_t k);

using Assignment = std::vector<std::pair<std::string, Rational>>;

/// Display name of the weight carried by an edge: the label, or "tau(i,j)"
/// for a free edge.
std::string weight_name(const DashedEdge& e);

struct Instance {
    LVAlgebra algebra;
    Assignment assignment;
};

/// Letters alpha..delta use pool slots 0..3. Ties and then free edges, in
/// edge order, take the lowest slots not used by a letter of this template.
/// Seed s reads slot + s. Throws std::invalid_argument for negative seeds.
Instance instantiate(const CaseTemplate& t, std::int64_t seed);

/// Same template with every implied letter and tie replaced by a free edge.
CaseTemplate untied(const CaseTemplate& t);

struct SeedResult {
    std::int64_t seed = 0;
    Assignment assignment;
    std::size_t computed_dim = 0;
    bool subspace_match = false;
    std::size_t rule_gap = 0;
    bool rules_contain_kernel = true;
};

struct CaseReport {
    std::string name;
    std::string claim;
    bool literal_table = false;
    Assignment instantiation;
    std::size_t computed_dim = 0;
    std::size_t expected_dim = 0;
    bool subspace_match = false;
    std::size_t rule_gap = 0;
    bool seed_stable = true;
    std::vector<SeedResult> seeds;
    std::vector<std::string> discrepancies;
    std::vector<std::string> notes;

    [[nodiscard]] bool pass() const { return subspace_match; }
};

struct VerifyOptions {
    bool literal_table = false;
};

/// PASS iff every seed's exact kernel equals the claimed subspace.
CaseReport verify_case(const CaseTemplate& t, const std::vector<std::int64_t>& seeds, VerifyOptions opts = {});

/// Exact relations among the template's weight labels under which every map
/// of `maps` is a derivation. The Leibniz residuals are affine in the
/// weights, so this is one linear solve. Each relation is rendered as text,
/// e.g. "tau(3,5) = 1/2". Returns {"inconsistent"} if no weights work and an
/// empty list if the maps are derivations for all weights.
std::vector<std::string> weight_conditions(const CaseTemplate& t, const std::vector<LinearMap>& maps);

/// Orientation flips relative to the frozen template: bit e set means edge e
/// carries its value on the other endpoint.
struct OrientationSearch {
    std::size_t edges = 0;
    std::vector<std::uint32_t> matching;

    [[nodiscard]] bool frozen_matches() const;
};
OrientationSearch resolve_orientation(const CaseTemplate& t, std::int64_t seed = 0, bool literal_table = false);

struct PatternClass {
    std::uint64_t mask = 0;  ///< canonical dashed mask over pairs in (i,j) order
    std::size_t dashed = 0;
    std::size_t representatives = 0;  ///< labeled patterns in the class
    std::size_t generic_dim = 0;
    std::vector<std::string> cases;  ///< M-rows with this dashed shape
};

/// Every solid/dashed pattern on n vertices up to isomorphism, each with the
/// dimension of Der for all-distinct generic weights. Sorted by dashed count,
/// then mask. Throws DimensionError unless 1 <= n <= 5.
std::vector<PatternClass> enumerate_patterns(std::size_t n);

inline constexpr std::size_t kMaxCensusVertices = 5;

}  // namespace lvder
