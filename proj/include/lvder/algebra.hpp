#pragma once

#include "lvder/subspace.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lvder {

/// Coordinates over the natural basis e_1..e_n.
using Element = std::vector<Rational>;

Element basis_element(std::size_t n, std::size_t k);

/// Raised when a structure matrix breaks the LV constraints. Indices are
/// 0-based; what() reports them 1-based.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, std::size_t row, std::size_t col)
        : std::runtime_error(what), row_(row), col_(col) {}
    [[nodiscard]] std::size_t row() const { return row_; }
    [[nodiscard]] std::size_t col() const { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

/// Lotka-Volterra algebra: commutative, with e_i e_j = α_ij e_i + α_ji e_j,
/// α_ii = 1/2 and α_ij + α_ji = 1.
class LVAlgebra {
public:
    /// Validates and wraps a structure matrix (see make_algebra).
    explicit LVAlgebra(RatMatrix alpha);

    /// Skips validation. Only meant for tests that probe invalid inputs.
    static LVAlgebra unchecked(RatMatrix alpha);

    [[nodiscard]] std::size_t dim() const { return alpha_.rows(); }
    [[nodiscard]] const RatMatrix& alpha() const { return alpha_; }
    [[nodiscard]] const Rational& alpha(std::size_t i, std::size_t j) const { return alpha_(i, j); }
    [[nodiscard]] bool solid(std::size_t i, std::size_t j) const { return alpha_(i, j) == half(); }

    friend bool operator==(const LVAlgebra&, const LVAlgebra&) = default;

private:
    struct NoCheck {};
    LVAlgebra(RatMatrix alpha, NoCheck) : alpha_(std::move(alpha)) {}
    RatMatrix alpha_;
};

/// Throws ValidationError naming the first violated constraint, scanning
/// row-major.
LVAlgebra make_algebra(RatMatrix alpha);

Element multiply(const LVAlgebra& a, const Element& x, const Element& y);

/// ω(x) = Σ x_i.
Rational weight(const Element& x);

/// N = ker ω, the weight-zero hyperplane.
Subspace barideal(std::size_t n);
inline Subspace barideal(const LVAlgebra& a) { return barideal(a.dim()); }

/// Checks ω(e_i e_j) = ω(e_i)ω(e_j) on all basis pairs.
bool is_homomorphism_omega(const LVAlgebra& a);

}  // namespace lvder
