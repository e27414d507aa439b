#include "lvder/derivation.hpp"

namespace lvder {

LinearMap::LinearMap(RatMatrix m) : mat(std::move(m)) {
    if (mat.rows() != mat.cols()) throw DimensionError("linear map must be square");
}

Element LinearMap::image(std::size_t k) const {
    Element v(dim());
    for (std::size_t t = 0; t < dim(); ++t) v[t] = mat(t, k);
    return v;
}

Element LinearMap::apply(const Element& x) const {
    if (x.size() != dim()) throw DimensionError("element dimension does not match map");
    return mat.apply(x);
}

std::vector<Rational> vectorize(const LinearMap& d) {
    const std::size_t n = d.dim();
    std::vector<Rational> v(n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) v[vec_index(n, t, k)] = d.mat(t, k);
    return v;
}

LinearMap unvectorize(std::size_t n, std::span<const Rational> v) {
    if (v.size() != n * n) throw DimensionError("coefficient vector must have length n^2");
    RatMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) m(t, k) = v[vec_index(n, t, k)];
    return LinearMap(std::move(m));
}

RatMatrix leibniz_system(const LVAlgebra& a) {
    const std::size_t n = a.dim();
    RatMatrix sys(n * n * (n + 1) / 2, n * n);
    std::size_t base = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j, base += n) {
            // D(e_i e_j) = α_ij D(e_i) + α_ji D(e_j)
            for (std::size_t t = 0; t < n; ++t) {
                sys(base + t, vec_index(n, t, i)) += a.alpha(i, j);
                sys(base + t, vec_index(n, t, j)) += a.alpha(j, i);
            }
            // D(e_p) e_q = Σ_s λ_sp (α_sq e_s + α_qs e_q), for (p,q) = (i,j) and (j,i)
            const std::pair<std::size_t, std::size_t> sides[2] = {{i, j}, {j, i}};
            for (auto [p, q] : sides) {
                for (std::size_t s = 0; s < n; ++s) {
                    sys(base + s, vec_index(n, s, p)) -= a.alpha(s, q);
                    sys(base + q, vec_index(n, s, p)) -= a.alpha(q, s);
                }
            }
        }
    }
    return sys;
}

std::vector<LinearMap> maps_of(std::size_t n, const Subspace& s) {
    std::vector<LinearMap> maps;
    maps.reserve(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) maps.push_back(unvectorize(n, s.basis().row(r)));
    return maps;
}

DerivationSpace derivation_space(const LVAlgebra& a) {
    DerivationSpace out;
    out.algebra_dim = a.dim();
    out.space = kernel_basis(leibniz_system(a));
    out.maps = maps_of(a.dim(), out.space);
    return out;
}

bool leibniz_holds(const LVAlgebra& a, const LinearMap& d, const Element& x, const Element& y) {
    const Element lhs = d.apply(multiply(a, x, y));
    Element rhs = multiply(a, d.apply(x), y);
    const Element right = multiply(a, x, d.apply(y));
    for (std::size_t t = 0; t < rhs.size(); ++t) rhs[t] += right[t];
    return lhs == rhs;
}

DerivationCheck is_derivation(const LVAlgebra& a, const LinearMap& d) {
    const std::size_t n = a.dim();
    if (d.dim() != n)
        throw DimensionError("map is " + std::to_string(d.dim()) + "x" + std::to_string(d.dim()) +
                             " but the algebra has dimension " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!leibniz_holds(a, d, basis_element(n, i), basis_element(n, j))) return {false, std::pair{i, j}};
    return {};
}

}  // namespace lvder
