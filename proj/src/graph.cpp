#include "lvder/graph.hpp"

#include <algorithm>
#include <numeric>

namespace lvder {

std::vector<std::size_t> IndexSet::items() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

std::string to_string(IndexSet s) {
    std::string out = "{";
    bool first = true;
    for (auto i : s.items()) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

WeightedGraph::WeightedGraph(std::size_t n) : n_(n) {
    edges_.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges_.push_back({i, j, half()});
}

std::size_t WeightedGraph::slot(std::size_t i, std::size_t j) const { return i * (2 * n_ - i - 1) / 2 + (j - i - 1); }

WeightedGraph WeightedGraph::from_edges(std::size_t n, const std::vector<Edge>& records) {
    WeightedGraph g(n);
    std::vector<bool> seen(g.edges_.size(), false);
    for (const auto& r : records) {
        if (r.i >= n || r.j >= n)
            throw DimensionError("edge (" + std::to_string(r.i + 1) + "," + std::to_string(r.j + 1) +
                                 ") refers to a vertex outside 1.." + std::to_string(n));
        if (r.i == r.j) throw DimensionError("self-loop at vertex " + std::to_string(r.i + 1));
        const bool flipped = r.i > r.j;
        const std::size_t lo = flipped ? r.j : r.i;
        const std::size_t hi = flipped ? r.i : r.j;
        const std::size_t s = g.slot(lo, hi);
        if (seen[s])
            throw DimensionError("pair {" + std::to_string(lo + 1) + "," + std::to_string(hi + 1) +
                                 "} given more than once");
        seen[s] = true;
        g.edges_[s].w = flipped ? Rational(1 - r.w) : r.w;
    }
    return g;
}

std::vector<Edge> WeightedGraph::dashed_edges() const {
    std::vector<Edge> out;
    std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(out), [](const Edge& e) { return !e.solid(); });
    return out;
}

Rational WeightedGraph::weight(std::size_t i, std::size_t j) const {
    if (i == j) return half();
    return i < j ? edges_[slot(i, j)].w : Rational(1 - edges_[slot(j, i)].w);
}

std::uint64_t WeightedGraph::dashed_mask() const {
    std::uint64_t m = 0;
    for (std::size_t s = 0; s < edges_.size(); ++s)
        if (!edges_[s].solid()) m |= 1ULL << s;
    return m;
}

WeightedGraph graph_of(const LVAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<Edge> records;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) records.push_back({i, j, a.alpha(i, j)});
    return WeightedGraph::from_edges(n, records);
}

LVAlgebra algebra_of(const WeightedGraph& g) {
    const std::size_t n = g.n();
    RatMatrix alpha(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) alpha(i, j) = g.weight(i, j);
    return LVAlgebra(std::move(alpha));
}

std::size_t gamma(const LVAlgebra& a) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (!a.solid(i, j)) ++count;
    return count;
}

SupportSets support_sets(const LVAlgebra& a) {
    const std::size_t n = a.dim();
    SupportSets out;
    out.s.resize(n);
    out.nsets.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (a.solid(i, k)) out.s[k].insert(i);
    for (std::size_t k = 0; k < n; ++k) {
        IndexSet acc = IndexSet::all(n);
        for (auto i : out.s[k].items()) acc = acc & out.s[i];
        out.nsets[k] = acc;
    }
    return out;
}

bool are_equivalent(const WeightedGraph& g1, const WeightedGraph& g2) {
    if (g1.n() != g2.n()) throw DimensionError("graphs have different vertex counts");
    return g1 == g2;
}

namespace {

void check_permutation(const Permutation& perm, std::size_t n) {
    if (perm.size() != n) throw DimensionError("permutation length does not match dimension");
    std::vector<bool> hit(n, false);
    for (auto p : perm) {
        if (p >= n || hit[p]) throw DimensionError("not a permutation of 0.." + std::to_string(n - 1));
        hit[p] = true;
    }
}

}  // namespace

LVAlgebra relabel(const LVAlgebra& a, const Permutation& perm) {
    const std::size_t n = a.dim();
    check_permutation(perm, n);
    RatMatrix alpha(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) alpha(perm[i], perm[j]) = a.alpha(i, j);
    return LVAlgebra(std::move(alpha));
}

WeightedGraph relabel(const WeightedGraph& g, const Permutation& perm) {
    return graph_of(relabel(algebra_of(g), perm));
}

namespace {

void require_small(std::size_t n) {
    if (n > kMaxCanonicalVertices)
        throw DimensionError("canonical labeling is exhaustive and limited to n <= " +
                             std::to_string(kMaxCanonicalVertices) + ", got n = " + std::to_string(n));
}

}  // namespace

WeightedGraph canonical_form(const WeightedGraph& g) {
    const std::size_t n = g.n();
    require_small(n);
    // source[a] is the original vertex placed at position a.
    std::vector<std::size_t> source(n);
    std::iota(source.begin(), source.end(), 0);
    std::vector<Rational> best;
    std::vector<Rational> candidate(g.edges().size());
    do {
        std::size_t s = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) candidate[s++] = g.weight(source[a], source[b]);
        if (best.empty() || candidate < best) best = candidate;
    } while (std::next_permutation(source.begin(), source.end()));

    std::vector<Edge> records;
    std::size_t s = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) records.push_back({a, b, best[s++]});
    return WeightedGraph::from_edges(n, records);
}

bool are_isomorphic(const WeightedGraph& g1, const WeightedGraph& g2) {
    if (g1.n() != g2.n()) return false;
    return canonical_form(g1) == canonical_form(g2);
}

std::uint64_t canonical_pattern(const WeightedGraph& g) {
    const std::size_t n = g.n();
    require_small(n);
    std::vector<std::vector<bool>> dashed(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) dashed[e.i][e.j] = dashed[e.j][e.i] = !e.solid();
    std::vector<std::size_t> source(n);
    std::iota(source.begin(), source.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t m = 0;
        std::size_t s = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b, ++s)
                if (dashed[source[a]][source[b]]) m |= 1ULL << s;
        best = std::min(best, m);
    } while (std::next_permutation(source.begin(), source.end()));
    return best;
}

}  // namespace lvder
