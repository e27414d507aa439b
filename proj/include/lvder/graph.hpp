#pragma once

#include "lvder/algebra.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace lvder {

/// Small set of 0-based vertex indices (n <= 64).
class IndexSet {
public:
    constexpr IndexSet() = default;
    static constexpr IndexSet from_bits(std::uint64_t bits) {
        IndexSet s;
        s.bits_ = bits;
        return s;
    }
    static IndexSet of(std::initializer_list<std::size_t> items) {
        IndexSet s;
        for (auto i : items) s.insert(i);
        return s;
    }
    static constexpr IndexSet all(std::size_t n) { return from_bits(n >= 64 ? ~0ULL : (1ULL << n) - 1); }

    constexpr void insert(std::size_t i) { bits_ |= 1ULL << i; }
    [[nodiscard]] constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1ULL; }
    [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
    [[nodiscard]] std::vector<std::size_t> items() const;

    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(IndexSet, IndexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// "{1,3,4,5}" with 1-based indices.
std::string to_string(IndexSet s);

/// Edge record of the weight graph: α_ij = w, α_ji = 1 − w, stored with i < j.
struct Edge {
    std::size_t i;
    std::size_t j;
    Rational w;

    [[nodiscard]] bool solid() const { return w == half(); }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weight graph of an LV algebra relative to its natural basis. Every
/// unordered pair is stored exactly once (solid pairs carry w = 1/2), sorted
/// by (i, j), so two graphs describe the same algebra iff they compare equal.
class WeightedGraph {
public:
    explicit WeightedGraph(std::size_t n = 0);

    /// Builds a graph from arbitrary (i, j, w) records, 0-based. A record with
    /// i > j is normalized to (j, i, 1 − w). Missing pairs default to 1/2.
    /// Throws DimensionError on self-loops, out-of-range vertices or repeated
    /// pairs.
    static WeightedGraph from_edges(std::size_t n, const std::vector<Edge>& records);

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] std::vector<Edge> dashed_edges() const;
    /// α_ij for i != j.
    [[nodiscard]] Rational weight(std::size_t i, std::size_t j) const;
    /// Bitmask over edges() marking the dashed pairs.
    [[nodiscard]] std::uint64_t dashed_mask() const;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    [[nodiscard]] std::size_t slot(std::size_t i, std::size_t j) const;
    std::size_t n_;
    std::vector<Edge> edges_;
};

WeightedGraph graph_of(const LVAlgebra& a);
LVAlgebra algebra_of(const WeightedGraph& g);

/// Number of dashed pairs (α_ij != 1/2).
std::size_t gamma(const LVAlgebra& a);

/// S_k = {i : e_i e_k = (e_i + e_k)/2} and N_k = ∩_{i∈S_k} S_i.
struct SupportSets {
    std::vector<IndexSet> s;
    std::vector<IndexSet> nsets;
};
SupportSets support_sets(const LVAlgebra& a);

bool are_equivalent(const WeightedGraph& g1, const WeightedGraph& g2);

/// Permutation convention: vertex i of the input becomes vertex perm[i].
using Permutation = std::vector<std::size_t>;

LVAlgebra relabel(const LVAlgebra& a, const Permutation& perm);
WeightedGraph relabel(const WeightedGraph& g, const Permutation& perm);

inline constexpr std::size_t kMaxCanonicalVertices = 10;

/// Lexicographically smallest weight sequence over all n! relabelings.
/// Throws DimensionError for n > 10.
WeightedGraph canonical_form(const WeightedGraph& g);
bool are_isomorphic(const WeightedGraph& g1, const WeightedGraph& g2);

/// Smallest dashed-pair mask over all relabelings, ignoring weights. Two
/// graphs share a solid/dashed pattern up to isomorphism iff these agree.
std::uint64_t canonical_pattern(const WeightedGraph& g);

}  // namespace lvder
