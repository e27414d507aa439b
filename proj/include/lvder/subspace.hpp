#pragma once

#include "lvder/matrix.hpp"

namespace lvder {

/// A linear subspace of Q^ambient. The basis rows are kept in reduced row
/// echelon form with increasing pivots, so equal subspaces have identical
/// bases and compare equal structurally.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    /// Span of the rows of `generators` (which need not be independent).
    static Subspace span(const RatMatrix& generators);
    static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& generators);
    static Subspace full(std::size_t ambient_dim);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] const RatMatrix& basis() const { return basis_; }
    [[nodiscard]] std::vector<Rational> basis_vector(std::size_t i) const;

    [[nodiscard]] bool contains(std::span<const Rational> v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_;
    RatMatrix basis_;
};

/// Null space {x : m·x = 0} as a canonical subspace of Q^cols.
Subspace kernel_basis(const RatMatrix& m);

/// Throws DimensionError when ambient dimensions differ.
bool subspace_equal(const Subspace& a, const Subspace& b);
/// True iff b ⊆ a.
bool subspace_contains(const Subspace& a, const Subspace& b);

Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace lvder
