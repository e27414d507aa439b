#include "lvder/algebra.hpp"

#include <string>

namespace lvder {

Element basis_element(std::size_t n, std::size_t k) {
    Element e(n);
    e.at(k) = 1;
    return e;
}

namespace {

void validate(const RatMatrix& alpha) {
    if (alpha.rows() != alpha.cols())
        throw DimensionError("structure matrix must be square, got " + std::to_string(alpha.rows()) + "x" +
                             std::to_string(alpha.cols()));
    if (alpha.rows() == 0) throw DimensionError("structure matrix must have n >= 1");
    const std::size_t n = alpha.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            if (i == j) {
                if (alpha(i, i) != half())
                    throw ValidationError("diagonal entry alpha" + at + " = " + to_string(alpha(i, i)) +
                                              ", expected 1/2",
                                          i, i);
            } else if (i < j && alpha(i, j) + alpha(j, i) != 1) {
                const Rational sum = alpha(i, j) + alpha(j, i);
                throw ValidationError("alpha" + at + " + alpha(" + std::to_string(j + 1) + "," +
                                          std::to_string(i + 1) + ") = " + to_string(sum) + ", expected 1",
                                      i, j);
            }
        }
    }
}

}  // namespace

LVAlgebra::LVAlgebra(RatMatrix alpha) : alpha_(std::move(alpha)) { validate(alpha_); }

LVAlgebra LVAlgebra::unchecked(RatMatrix alpha) { return LVAlgebra(std::move(alpha), NoCheck{}); }

LVAlgebra make_algebra(RatMatrix alpha) { return LVAlgebra(std::move(alpha)); }

Element multiply(const LVAlgebra& a, const Element& x, const Element& y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw DimensionError("element dimension does not match algebra");
    Element z(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Rational c = x[i] * y[j];
            z[i] += c * a.alpha(i, j);
            z[j] += c * a.alpha(j, i);
        }
    }
    return z;
}

Rational weight(const Element& x) {
    Rational s = 0;
    for (const auto& v : x) s += v;
    return s;
}

Subspace barideal(std::size_t n) {
    RatMatrix ones(1, n);
    for (std::size_t i = 0; i < n; ++i) ones(0, i) = 1;
    return kernel_basis(ones);
}

bool is_homomorphism_omega(const LVAlgebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (weight(multiply(a, basis_element(n, i), basis_element(n, j))) != 1) return false;
    return true;
}

}  // namespace lvder
