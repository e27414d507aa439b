#include "lvder/subspace.hpp"

namespace lvder {

Subspace Subspace::span(const RatMatrix& generators) {
    Subspace s(generators.cols());
    const EchelonForm ef = echelon(generators);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) s.basis_.push_row(ef.reduced.row(r));
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& generators) {
    return span(RatMatrix::from_rows(generators, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) { return span(RatMatrix::identity(ambient_dim)); }

std::vector<Rational> Subspace::basis_vector(std::size_t i) const {
    const auto r = basis_.row(i);
    return {r.begin(), r.end()};
}

bool Subspace::contains(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
    RatMatrix stacked = basis_;
    stacked.push_row(v);
    return rank(stacked) == dim();
}

Subspace kernel_basis(const RatMatrix& m) {
    const std::size_t n = m.cols();
    const EchelonForm ef = echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : ef.pivots) is_pivot[p] = true;

    RatMatrix gens(0, n);
    std::vector<Rational> v(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        for (auto& x : v) x = 0;
        v[free] = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, free);
        gens.push_row(v);
    }
    return Subspace::span(gens);
}

namespace {
void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("subspaces live in ambient spaces of dimension " + std::to_string(a.ambient_dim()) +
                             " and " + std::to_string(b.ambient_dim()));
}
}  // namespace

bool subspace_equal(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    return a == b;
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    if (b.dim() > a.dim()) return false;
    RatMatrix stacked = a.basis();
    stacked.append(b.basis());
    return rank(stacked) == a.dim();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    // a ∩ b is cut out by the annihilators of both.
    RatMatrix annihilators = kernel_basis(a.basis()).basis();
    annihilators.append(kernel_basis(b.basis()).basis());
    if (annihilators.rows() == 0) return Subspace::full(a.ambient_dim());
    return kernel_basis(annihilators);
}

}  // namespace lvder
