#pragma once

#include "lvder/derivation.hpp"
#include "lvder/graph.hpp"

#include <algorithm>
#include <random>
#include <tuple>
#include <vector>

namespace lvder::testing {

inline Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

/// α_pq = w for each 1-based record (p, q, w); everything else solid.
inline LVAlgebra algebra_from(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& edges) {
    std::vector<Edge> records;
    for (const auto& [p, qq, w] : edges) records.push_back({p - 1, qq - 1, w});
    return algebra_of(WeightedGraph::from_edges(n, records));
}

inline LVAlgebra all_solid(std::size_t n) { return algebra_of(WeightedGraph(n)); }

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    /// Small rational in [-3, 3] with denominator up to 7.
    Rational scalar() {
        const long d = static_cast<long>(index(1, 7));
        const long p = static_cast<long>(index(0, 42)) - 21;
        return q(p, d);
    }

    Element element(std::size_t n) {
        Element v(n);
        for (auto& x : v) x = scalar();
        return v;
    }

    /// Dashed weight: p/q in (0, 1) with q <= 9, never 1/2.
    Rational dashed_weight() {
        for (;;) {
            const long d = static_cast<long>(index(2, 9));
            const long p = static_cast<long>(index(1, static_cast<std::size_t>(d - 1)));
            Rational w(p, d);
            w.canonicalize();
            if (w != half()) return w;
        }
    }

    /// Each pair is solid with probability p_solid, otherwise dashed with a
    /// weight drawn from a small pool so that coincidences are common.
    LVAlgebra algebra(std::size_t n, double p_solid) {
        static const Rational pool[] = {q(1, 3), q(2, 3), q(1, 4), q(3, 4), q(1, 5), q(2, 5)};
        std::vector<Edge> records;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (coin(p_solid)) continue;
                const Rational w = coin(0.7) ? pool[index(0, 5)] : dashed_weight();
                records.push_back({i, j, w});
            }
        return algebra_of(WeightedGraph::from_edges(n, records));
    }

    Permutation permutation(std::size_t n) {
        Permutation p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        std::shuffle(p.begin(), p.end(), rng_);
        return p;
    }

private:
    std::mt19937_64 rng_;
};

/// Leibniz system assembled column by column from multiply(): column
/// (t, k) holds the residual of the map e_k ↦ e_t on every basis pair.
inline RatMatrix leibniz_by_multiplication(const LVAlgebra& a) {
    const std::size_t n = a.dim();
    RatMatrix sys(n * n * (n + 1) / 2, n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t) {
            RatMatrix m(n, n);
            m(t, k) = 1;
            const LinearMap d(m);
            std::size_t row = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    const Element ei = basis_element(n, i), ej = basis_element(n, j);
                    const Element lhs = d.apply(multiply(a, ei, ej));
                    const Element r1 = multiply(a, d.apply(ei), ej);
                    const Element r2 = multiply(a, ei, d.apply(ej));
                    for (std::size_t c = 0; c < n; ++c) sys(row++, k * n + t) = lhs[c] - r1[c] - r2[c];
                }
        }
    return sys;
}

/// {f : Im f ⊂ N}, built from the maps e_k ↦ e_t − e_s.
inline Subspace image_in_barideal(std::size_t n) {
    std::vector<std::vector<Rational>> gens;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 1; t < n; ++t) {
            std::vector<Rational> v(n * n);
            v[k * n] = 1;
            v[k * n + t] = -1;
            gens.push_back(v);
        }
    return Subspace::span(n * n, gens);
}

/// The n = 2 Leibniz conditions written out by hand for α = α_12, α' = 1 − α,
/// unknowns ordered (λ11, λ21, λ12, λ22):
///   e_1e_1:  λ11 + 2αλ21 = 0,   (2α − 1)λ21 = 0
///   e_2e_2:  λ22 + 2α'λ12 = 0,  (2α' − 1)λ12 = 0
///   e_1e_2:  α(λ12 + λ22) = 0,  α'(λ11 + λ21) = 0
inline RatMatrix closed_form_n2(const Rational& alpha) {
    const Rational beta = 1 - alpha;
    return RatMatrix::from_rows({{1, 2 * alpha, 0, 0},
                                 {0, 2 * alpha - 1, 0, 0},
                                 {0, 0, 2 * beta, 1},
                                 {0, 0, 2 * beta - 1, 0},
                                 {0, 0, alpha, alpha},
                                 {beta, beta, 0, 0}});
}

}  // namespace lvder::testing
