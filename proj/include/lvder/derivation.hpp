#pragma once

#include "lvder/algebra.hpp"

#include <optional>
#include <utility>

namespace lvder {

/// Linear map on Q^n; column k holds the coordinates of D(e_k), so
/// mat(t, k) = λ_tk.
struct LinearMap {
    RatMatrix mat;

    LinearMap() = default;
    explicit LinearMap(RatMatrix m);
    static LinearMap zero(std::size_t n) { return LinearMap(RatMatrix(n, n)); }

    [[nodiscard]] std::size_t dim() const { return mat.rows(); }
    [[nodiscard]] Element image(std::size_t k) const;
    [[nodiscard]] Element apply(const Element& x) const;

    friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// Position of λ_tk in the flattened coefficient vector: columns of the map
/// are concatenated, so slot = k·n + t (0-based).
constexpr std::size_t vec_index(std::size_t n, std::size_t t, std::size_t k) { return k * n + t; }

std::vector<Rational> vectorize(const LinearMap& d);
LinearMap unvectorize(std::size_t n, std::span<const Rational> v);

struct DerivationSpace {
    std::size_t algebra_dim = 0;
    Subspace space;
    std::vector<LinearMap> maps;

    [[nodiscard]] std::size_t dim() const { return space.dim(); }
};

/// n·n(n+1)/2 × n² system. The block for the basis pair (i, j), i <= j,
/// holds the n coordinates of D(e_i e_j) − D(e_i)e_j − e_iD(e_j).
RatMatrix leibniz_system(const LVAlgebra& a);

DerivationSpace derivation_space(const LVAlgebra& a);

/// Packs the basis of a subspace of Q^{n²} as linear maps.
std::vector<LinearMap> maps_of(std::size_t n, const Subspace& s);

struct DerivationCheck {
    bool ok = true;
    /// First failing basis pair (i, j) with i <= j, 0-based.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Throws DimensionError when the map and algebra sizes differ.
DerivationCheck is_derivation(const LVAlgebra& a, const LinearMap& d);

/// D(xy) == D(x)y + xD(y) for the given elements.
bool leibniz_holds(const LVAlgebra& a, const LinearMap& d, const Element& x, const Element& y);

}  // namespace lvder
