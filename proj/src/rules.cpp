#include "lvder/rules.hpp"

namespace lvder {

namespace {

std::string one(std::size_t i) { return std::to_string(i + 1); }

std::string lam(std::size_t t, std::size_t k) { return "lambda(" + one(t) + "," + one(k) + ")"; }

std::string pair_tag(std::size_t i, std::size_t j) { return "dashed {" + one(i) + "," + one(j) + "}"; }

class RowBuilder {
public:
    RowBuilder(ConstraintSet& cs, std::size_t n) : cs_(cs), n_(n), row_(n * n) {}

    void zero(std::size_t t, std::size_t k, std::string tag) {
        clear();
        row_[vec_index(n_, t, k)] = 1;
        cs_.add(row_, std::move(tag));
    }
    void equal(std::size_t t, std::size_t k1, std::size_t k2, std::string tag) {
        clear();
        row_[vec_index(n_, t, k1)] = 1;
        row_[vec_index(n_, t, k2)] = -1;
        cs_.add(row_, std::move(tag));
    }
    void sum(IndexSet ts, std::size_t k, std::string tag) {
        clear();
        for (auto t : ts.items()) row_[vec_index(n_, t, k)] = 1;
        cs_.add(row_, std::move(tag));
    }

private:
    void clear() {
        for (auto& x : row_) x = 0;
    }
    ConstraintSet& cs_;
    std::size_t n_;
    std::vector<Rational> row_;
};

}  // namespace

void ConstraintSet::add(std::span<const Rational> row, std::string tag) {
    rows.push_row(row);
    provenance.push_back(std::move(tag));
}

void ConstraintSet::merge(const ConstraintSet& other) {
    if (other.ambient_dim != ambient_dim) throw DimensionError("constraint sets have different ambient dimensions");
    rows.append(other.rows);
    provenance.insert(provenance.end(), other.provenance.begin(), other.provenance.end());
}

ConstraintSet support_constraints(const LVAlgebra& a) {
    const std::size_t n = a.dim();
    const SupportSets ss = support_sets(a);
    ConstraintSet cs(n);
    RowBuilder b(cs, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t = 0; t < n; ++t)
            if (!ss.nsets[k].contains(t))
                b.zero(t, k, "support: " + lam(t, k) + "=0, " + one(t) + " not in N_" + one(k));
        b.sum(IndexSet::all(n), k, "image weight: sum of D(e_" + one(k) + ") is 0");
    }
    return cs;
}

ConstraintSet dashed_pair_constraints(const LVAlgebra& a) {
    const std::size_t n = a.dim();
    const SupportSets ss = support_sets(a);
    ConstraintSet cs(n);
    RowBuilder b(cs, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a.solid(i, j)) continue;
            const IndexSet I = ss.nsets[i] & ss.nsets[j];
            const IndexSet J = ss.nsets[i] - ss.nsets[j];
            const IndexSet K = ss.nsets[j] - ss.nsets[i];
            const std::string tag = pair_tag(i, j);
            for (auto t : I.items())
                b.equal(t, i, j, tag + ": " + lam(t, i) + "=" + lam(t, j) + " on I=" + to_string(I));
            if (I.size() <= 1) {
                for (auto t : I.items()) {
                    b.zero(t, i, tag + ": |I|<=1, " + lam(t, i) + "=0");
                    b.zero(t, j, tag + ": |I|<=1, " + lam(t, j) + "=0");
                }
            }
            if (J.size() <= 1)
                for (auto t : J.items()) b.zero(t, i, tag + ": |J|<=1, " + lam(t, i) + "=0");
            if (K.size() <= 1)
                for (auto t : K.items()) b.zero(t, j, tag + ": |K|<=1, " + lam(t, j) + "=0");
            if (!I.empty()) {
                b.sum(I, i, tag + ": weight of D(e_" + one(i) + ") on I=" + to_string(I) + " is 0");
                b.sum(I, j, tag + ": weight of D(e_" + one(j) + ") on I=" + to_string(I) + " is 0");
            }
            if (!J.empty()) b.sum(J, i, tag + ": weight of D(e_" + one(i) + ") on J=" + to_string(J) + " is 0");
            if (!K.empty()) b.sum(K, j, tag + ": weight of D(e_" + one(j) + ") on K=" + to_string(K) + " is 0");
        }
    }
    return cs;
}

ConstraintSet rule_g1(const LVAlgebra& a) {
    const std::size_t n = a.dim();
    ConstraintSet cs(n);
    RowBuilder b(cs, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                if (a.solid(y, z) && !a.solid(x, y) && !a.solid(x, z) && a.alpha(x, y) != a.alpha(x, z))
                    b.zero(z, y,
                           "cross-weight triangle " + one(x) + "|" + one(y) + "," + one(z) + ": " + lam(z, y) + "=0");
            }
    return cs;
}

ConstraintSet rule_g2(const LVAlgebra& a) {
    const std::size_t n = a.dim();
    ConstraintSet cs(n);
    RowBuilder b(cs, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z) {
                if (x == y || x == z) continue;
                if (a.solid(x, y) && a.solid(x, z) && !a.solid(y, z))
                    b.equal(x, y, z,
                            "apex triangle " + one(x) + "|" + one(y) + "," + one(z) + ": " + lam(x, y) + "=" +
                                lam(x, z));
            }
    return cs;
}

std::vector<ConstraintSet> all_rules(const LVAlgebra& a) {
    return {support_constraints(a), dashed_pair_constraints(a), rule_g1(a), rule_g2(a)};
}

Subspace constrained_space(std::span<const ConstraintSet> sets) {
    if (sets.empty()) throw DimensionError("constrained_space needs at least one constraint set");
    ConstraintSet all;
    all.ambient_dim = sets.front().ambient_dim;
    all.rows = RatMatrix(0, all.ambient_dim);
    for (const auto& cs : sets) all.merge(cs);
    return kernel_basis(all.rows);
}

Subspace constrained_space(const ConstraintSet& cs) { return constrained_space(std::span(&cs, 1)); }

Subspace constrained_space(std::initializer_list<ConstraintSet> sets) {
    return constrained_space(std::span(sets.begin(), sets.size()));
}

std::vector<std::string> dashed_pair_consistency(const LVAlgebra& a, const DerivationSpace& der) {
    const std::size_t n = a.dim();
    const SupportSets ss = support_sets(a);
    // Coordinates λ_tk that are not identically zero on Der(A).
    std::vector<bool> live(n * n, false);
    for (std::size_t r = 0; r < der.space.dim(); ++r)
        for (std::size_t c = 0; c < n * n; ++c)
            if (sgn(der.space.basis()(r, c)) != 0) live[c] = true;

    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a.solid(i, j)) continue;
            const IndexSet J = ss.nsets[i] - ss.nsets[j];
            const IndexSet K = ss.nsets[j] - ss.nsets[i];
            for (auto t : J.items())
                if (live[vec_index(n, t, i)] && a.alpha(t, j) != a.alpha(i, j))
                    out.push_back(pair_tag(i, j) + ": " + one(t) + " in supp of J-block but alpha(" + one(t) + "," +
                                  one(j) + ") != alpha(" + one(i) + "," + one(j) + ")");
            for (auto t : K.items())
                if (live[vec_index(n, t, j)] && a.alpha(i, t) != a.alpha(i, j))
                    out.push_back(pair_tag(i, j) + ": " + one(t) + " in supp of K-block but alpha(" + one(i) + "," +
                                  one(t) + ") != alpha(" + one(i) + "," + one(j) + ")");
        }
    }
    return out;
}

}  // namespace lvder
