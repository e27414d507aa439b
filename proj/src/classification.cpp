#include "lvder/classification.hpp"

#include "lvder/parallel.hpp"
#include "lvder/rules.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lvder {

namespace {

constexpr std::size_t kN = 5;

Element d(std::size_t i, std::size_t j) {
    Element v(kN);
    v[i - 1] = 1;
    v[j - 1] = -1;
    return v;
}

IndexSet ix(std::initializer_list<std::size_t> one_based) {
    IndexSet s;
    for (auto i : one_based) s.insert(i - 1);
    return s;
}

DashedEdge letter(std::size_t p, std::size_t q, const char* name) { return {p - 1, q - 1, LabelKind::Letter, name}; }
DashedEdge implied(std::size_t p, std::size_t q, const char* name) {
    return {p - 1, q - 1, LabelKind::ImpliedLetter, name};
}
DashedEdge tie(std::size_t p, std::size_t q, const char* name) { return {p - 1, q - 1, LabelKind::Tie, name}; }
DashedEdge free_edge(std::size_t p, std::size_t q) { return {p - 1, q - 1, LabelKind::Free, ""}; }

DerivationSpec image_spec(IndexSet kernel, std::vector<IndexSet> groups, std::vector<Element> image) {
    DerivationSpec s;
    s.kernel = kernel;
    s.equal_groups = std::move(groups);
    s.image = std::move(image);
    return s;
}

DerivationSpec twin_spec(IndexSet kernel, std::pair<std::size_t, std::size_t> first,
                         std::pair<std::size_t, std::size_t> second) {
    DerivationSpec s;
    s.kernel = kernel;
    for (auto [a, b] : {first, second}) {
        s.per_index[a - 1] = {d(a, b)};
        s.per_index[b - 1] = {d(a, b)};
    }
    return s;
}

std::vector<CaseTemplate> make_cases() {
    std::vector<CaseTemplate> c;
    auto add = [&](std::string name, std::vector<DashedEdge> edges, DerivationSpec claim,
                   std::optional<DerivationSpec> literal = std::nullopt) {
        c.push_back({std::move(name), kN, std::move(edges), std::move(claim), std::move(literal)});
    };
    const IndexSet none;

    add("M1", {}, image_spec(none, {}, {d(1, 2), d(1, 3), d(1, 4), d(1, 5)}));
    add("M2", {free_edge(1, 2)}, image_spec(none, {ix({1, 2})}, {d(3, 4), d(3, 5)}));
    add("M3", {letter(1, 5, "alpha"), letter(5, 3, "alpha")}, image_spec(none, {ix({1, 3, 5})}, {d(2, 4)}));
    add("M4", {letter(2, 1, "alpha"), letter(3, 1, "alpha"), letter(5, 1, "gamma")},
        image_spec(ix({1, 4, 5}), {}, {d(2, 3)}));
    add("M5", {letter(2, 1, "alpha"), letter(3, 1, "alpha"), letter(5, 1, "alpha")},
        image_spec(ix({1, 4}), {}, {d(2, 3), d(2, 5)}));
    add("M6", {letter(2, 1, "alpha"), letter(5, 1, "alpha"), letter(3, 4, "gamma")},
        image_spec(ix({1, 3, 4}), {}, {d(2, 5)}));
    add("M7", {letter(2, 1, "alpha"), letter(5, 1, "gamma"), letter(2, 5, "beta")},
        image_spec(none, {ix({1, 2, 5})}, {d(3, 4)}));
    add("M8", {free_edge(1, 2), free_edge(2, 3), letter(4, 3, "alpha"), letter(5, 3, "alpha")},
        image_spec(ix({1, 2, 3}), {}, {d(4, 5)}));
    add("M9", {letter(1, 2, "alpha"), letter(3, 2, "alpha"), letter(3, 5, "beta"), letter(1, 5, "beta")},
        image_spec(ix({2, 4, 5}), {}, {d(1, 3)}), twin_spec(ix({4}), {1, 3}, {2, 5}));
    add("M10", {letter(2, 1, "alpha"), letter(5, 1, "alpha"), letter(3, 1, "alpha"), letter(4, 1, "alpha")},
        image_spec(ix({1}), {}, {d(2, 3), d(2, 4), d(2, 5)}));
    add("M11", {letter(2, 1, "alpha"), letter(5, 1, "alpha"), letter(3, 1, "alpha"), letter(4, 1, "delta")},
        image_spec(ix({1, 4}), {}, {d(2, 3), d(2, 5)}));
    add("M12", {letter(2, 1, "alpha"), letter(5, 1, "alpha"), letter(3, 1, "delta"), letter(4, 1, "delta")},
        twin_spec(ix({1}), {2, 5}, {3, 4}));
    add("M13", {letter(2, 1, "alpha"), letter(5, 1, "alpha"), letter(3, 1, "gamma"), letter(4, 1, "delta")},
        image_spec(ix({1, 3, 4}), {}, {d(2, 5)}));
    add("M14",
        {letter(2, 1, "alpha"), implied(3, 1, "alpha"), letter(4, 1, "alpha"), implied(5, 1, "alpha"),
         free_edge(3, 5)},
        image_spec(ix({1}), {ix({3, 5})}, {d(2, 4)}), image_spec(ix({1}), {}, {d(2, 4)}));

    const std::vector<DashedEdge> square = {letter(2, 1, "alpha"), tie(2, 3, "u"), tie(5, 3, "u"),
                                            letter(5, 1, "alpha")};
    auto square_plus = [&](std::vector<DashedEdge> extra) {
        auto e = square;
        e.insert(e.end(), extra.begin(), extra.end());
        return e;
    };
    const DerivationSpec square_claim = image_spec(ix({1, 3, 4}), {}, {d(2, 5)});
    add("M15", square_plus({free_edge(1, 3)}), square_claim);
    add("M16", square_plus({free_edge(1, 4)}), square_claim);
    add("M17", square_plus({free_edge(1, 3), free_edge(1, 4)}), square_claim);
    add("M18", square_plus({free_edge(1, 4), free_edge(2, 4)}), square_claim);

    add("M19",
        {tie(1, 2, "u"), tie(3, 2, "u"), tie(3, 4, "v"), free_edge(4, 5), tie(1, 4, "v"), letter(3, 5, "alpha"),
         letter(1, 5, "alpha")},
        image_spec(ix({2, 4, 5}), {}, {d(1, 3)}));
    add("M20",
        {tie(2, 1, "u"), letter(2, 4, "delta"), letter(1, 4, "alpha"), tie(5, 1, "u"), tie(2, 3, "v"),
         letter(3, 4, "beta"), tie(5, 3, "v"), letter(5, 4, "delta")},
        image_spec(ix({1, 3, 4}), {}, {d(2, 5)}), image_spec(ix({2, 4, 5}), {}, {d(1, 3)}));
    add("M21",
        {tie(1, 2, "u"), letter(2, 4, "delta"), letter(1, 4, "alpha"), tie(1, 5, "u"), tie(3, 2, "u"),
         letter(3, 4, "alpha"), tie(3, 5, "u"), letter(5, 4, "delta")},
        twin_spec(ix({4}), {1, 3}, {2, 5}), twin_spec(none, {1, 3}, {2, 5}));
    add("M22",
        {letter(2, 3, "alpha"), letter(4, 3, "alpha"), tie(2, 1, "u"), free_edge(1, 3), tie(4, 1, "u"),
         free_edge(1, 5), free_edge(3, 5), tie(4, 5, "v"), tie(2, 5, "v")},
        image_spec(ix({1, 3, 5}), {}, {d(2, 4)}));
    return c;
}

std::string one(std::size_t i) { return std::to_string(i + 1); }

std::string format_element(const Element& v) {
    std::string out;
    for (std::size_t t = 0; t < v.size(); ++t) {
        const int s = sgn(v[t]);
        if (s == 0) continue;
        if (s < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        const Rational mag = abs(v[t]);
        if (mag != 1) out += to_string(mag) + "*";
        out += "e_" + one(t);
    }
    return out.empty() ? "0" : out;
}

std::string format_span(const std::vector<Element>& gens) {
    std::string out = "<";
    for (std::size_t g = 0; g < gens.size(); ++g) out += (g ? ", " : "") + format_element(gens[g]);
    return out + ">";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::size_t letter_slot(const std::string& name) {
    static const std::map<std::string, std::size_t> slots = {{"alpha", 0}, {"beta", 1}, {"gamma", 2}, {"delta", 3}};
    const auto it = slots.find(name);
    if (it == slots.end()) throw std::invalid_argument("unknown weight letter '" + name + "'");
    return it->second;
}

std::string pair_name(std::size_t i, std::size_t j) {
    return "{" + one(std::min(i, j)) + "," + one(std::max(i, j)) + "}";
}

/// Distinct weight variables of a template in order of first appearance,
/// with the variable index of each edge.
struct Variables {
    std::vector<std::string> names;
    std::vector<std::size_t> of_edge;
};

Variables variables_of(const CaseTemplate& t) {
    Variables v;
    for (const auto& e : t.dashed) {
        const std::string name = weight_name(e);
        const auto it = std::find(v.names.begin(), v.names.end(), name);
        v.of_edge.push_back(static_cast<std::size_t>(it - v.names.begin()));
        if (it == v.names.end()) v.names.push_back(name);
    }
    return v;
}

RatMatrix structure_matrix(const CaseTemplate& t, const std::vector<Rational>& edge_values) {
    RatMatrix alpha(t.n, t.n);
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j) alpha(i, j) = half();
    for (std::size_t e = 0; e < t.dashed.size(); ++e) {
        alpha(t.dashed[e].i, t.dashed[e].j) = edge_values[e];
        alpha(t.dashed[e].j, t.dashed[e].i) = 1 - edge_values[e];
    }
    return alpha;
}

std::vector<Rational> leibniz_residuals(const LVAlgebra& a, const std::vector<LinearMap>& maps) {
    const std::size_t n = a.dim();
    std::vector<Rational> out;
    for (const auto& m : maps)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const Element ei = basis_element(n, i);
                const Element ej = basis_element(n, j);
                const Element lhs = m.apply(multiply(a, ei, ej));
                const Element r1 = multiply(a, m.apply(ei), ej);
                const Element r2 = multiply(a, ei, m.apply(ej));
                for (std::size_t c = 0; c < n; ++c) out.push_back(lhs[c] - r1[c] - r2[c]);
            }
    return out;
}

bool column_vanishes(const Subspace& s, std::size_t n, std::size_t k) {
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t t = 0; t < n; ++t)
            if (sgn(s.basis()(r, vec_index(n, t, k))) != 0) return false;
    return true;
}

std::string index_list(IndexSet s) {
    std::vector<std::string> parts;
    for (auto k : s.items()) parts.push_back("e_" + one(k));
    return join(parts, ",");
}

void diagnose(const CaseTemplate& t, const DerivationSpec& spec, const Subspace& claim, const LVAlgebra& a,
              const DerivationSpace& der, std::int64_t seed, std::vector<std::string>& out) {
    const std::size_t n = t.n;
    const std::string at = " (seed " + std::to_string(seed) + ")";
    const SupportSets ss = support_sets(a);
    for (std::size_t k = 0; k < n; ++k) {
        const bool der_zero = column_vanishes(der.space, n, k);
        const bool claim_zero = column_vanishes(claim, n, k);
        if (der_zero && !claim_zero)
            out.push_back("missing kernel condition e_" + one(k) + ": every derivation has D(e_" + one(k) +
                          ")=0 (N_" + one(k) + " = " + to_string(ss.nsets[k]) + ") but the claim leaves e_" +
                          one(k) + " free" + at);
        if (claim_zero && !der_zero && spec.kernel.contains(k))
            out.push_back("claim puts e_" + one(k) + " in ker but some derivation has D(e_" + one(k) + ") != 0" + at);
    }

    const std::vector<LinearMap> claim_maps = maps_of(n, claim);
    std::size_t failing = 0;
    std::string first;
    for (std::size_t r = 0; r < claim_maps.size(); ++r) {
        const auto check = is_derivation(a, claim_maps[r]);
        if (check.ok) continue;
        if (failing++ == 0)
            first = "claim basis map " + std::to_string(r + 1) + " fails on e_" + one(check.witness->first) + "e_" +
                    one(check.witness->second);
    }
    if (failing > 0)
        out.push_back(std::to_string(failing) + " of " + std::to_string(claim_maps.size()) +
                      " claim basis maps are not derivations; " + first + at);

    const std::size_t shared = intersect(der.space, claim).dim();
    if (shared < der.dim())
        out.push_back(std::to_string(der.dim() - shared) + " independent derivations lie outside the claim" + at);

    if (failing > 0) {
        const auto conds = weight_conditions(t, claim_maps);
        if (conds.size() == 1 && conds.front() == "inconsistent")
            out.push_back("no choice of weights makes the claim hold");
        else if (!conds.empty())
            out.push_back("claim holds only if " + join(conds, " and "));
    }
}

}  // namespace

std::string describe(const DerivationSpec& s) {
    std::vector<std::string> parts;
    if (!s.kernel.empty()) parts.push_back(index_list(s.kernel) + " in ker");
    for (const auto& g : s.equal_groups) {
        std::vector<std::string> f;
        for (auto k : g.items()) f.push_back("f(e_" + one(k) + ")");
        parts.push_back(join(f, "="));
    }
    std::vector<bool> done(64, false);
    for (const auto& [k, gens] : s.per_index) {
        if (done[k]) continue;
        std::vector<std::string> f;
        for (const auto& [k2, gens2] : s.per_index)
            if (!done[k2] && gens2 == gens) {
                f.push_back("f(e_" + one(k2) + ")");
                done[k2] = true;
            }
        parts.push_back(join(f, ",") + " in " + format_span(gens));
    }
    if (s.image) parts.push_back("Im f in " + format_span(*s.image));
    return parts.empty() ? "any map" : join(parts, "; ");
}

Subspace spec_subspace(const DerivationSpec& s, std::size_t n) {
    RatMatrix rows(0, n * n);
    std::vector<Rational> row(n * n);
    auto emit = [&] {
        rows.push_row(row);
        for (auto& x : row) x = 0;
    };
    for (auto k : s.kernel.items()) {
        if (k >= n) throw DimensionError("kernel index out of range");
        for (std::size_t t = 0; t < n; ++t) {
            row[vec_index(n, t, k)] = 1;
            emit();
        }
    }
    for (const auto& g : s.equal_groups) {
        const auto ks = g.items();
        for (std::size_t m = 1; m < ks.size(); ++m)
            for (std::size_t t = 0; t < n; ++t) {
                row[vec_index(n, t, ks[0])] = 1;
                row[vec_index(n, t, ks[m])] = -1;
                emit();
            }
    }
    for (std::size_t k = 0; k < n; ++k) {
        const std::vector<Element>* gens = nullptr;
        if (auto it = s.per_index.find(k); it != s.per_index.end())
            gens = &it->second;
        else if (s.image)
            gens = &*s.image;
        if (gens == nullptr) continue;
        // Column k lies in span(gens) iff it is orthogonal to every vector
        // orthogonal to all generators.
        const Subspace complement = kernel_basis(RatMatrix::from_rows(*gens, n));
        for (std::size_t c = 0; c < complement.dim(); ++c) {
            for (std::size_t t = 0; t < n; ++t) row[vec_index(n, t, k)] = complement.basis()(c, t);
            emit();
        }
    }
    return kernel_basis(rows);
}

bool CaseTemplate::has_undrawn_constraints() const {
    return std::any_of(dashed.begin(), dashed.end(), [](const DashedEdge& e) {
        return e.kind == LabelKind::ImpliedLetter || e.kind == LabelKind::Tie;
    });
}

const std::vector<CaseTemplate>& builtin_cases() {
    static const std::vector<CaseTemplate> cases = make_cases();
    return cases;
}

const CaseTemplate* find_case(const std::string& name) {
    for (const auto& c : builtin_cases())
        if (c.name == name) return &c;
    return nullptr;
}

Rational pool_value(std::size_t k) {
    static std::mutex mutex;
    static std::vector<Rational> pool = {Rational(1, 3), Rational(1, 4), Rational(1, 5), Rational(1, 7),
                                         Rational(2, 7), Rational(3, 8), Rational(2, 9), Rational(5, 11)};
    static unsigned long q = 11;
    std::lock_guard lock(mutex);
    while (pool.size() <= k) {
        ++q;
        for (unsigned long p = 1; 2 * p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Rational v(p, q);
            if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
        }
    }
    return pool[k];
}

std::string weight_name(const DashedEdge& e) {
    if (e.kind == LabelKind::Free) return "tau(" + one(e.i) + "," + one(e.j) + ")";
    return e.label;
}

Instance instantiate(const CaseTemplate& t, std::int64_t seed) {
    if (seed < 0) throw std::invalid_argument("seed must be non-negative, got " + std::to_string(seed));
    std::set<std::size_t> used;
    for (const auto& e : t.dashed)
        if (e.kind == LabelKind::Letter || e.kind == LabelKind::ImpliedLetter) used.insert(letter_slot(e.label));

    std::map<std::string, std::size_t> slot_of;
    std::size_t next = 0;
    auto take = [&] {
        while (used.contains(next)) ++next;
        used.insert(next);
        return next;
    };
    Assignment assignment;
    std::vector<Rational> values;
    for (const auto& e : t.dashed) {
        const std::string name = weight_name(e);
        auto it = slot_of.find(name);
        if (it == slot_of.end()) {
            const std::size_t slot = (e.kind == LabelKind::Letter || e.kind == LabelKind::ImpliedLetter)
                                         ? letter_slot(e.label)
                                         : take();
            it = slot_of.emplace(name, slot).first;
            assignment.emplace_back(name, pool_value(slot + static_cast<std::size_t>(seed)));
        }
        values.push_back(pool_value(it->second + static_cast<std::size_t>(seed)));
    }
    return {LVAlgebra(structure_matrix(t, values)), std::move(assignment)};
}

CaseTemplate untied(const CaseTemplate& t) {
    CaseTemplate out = t;
    for (auto& e : out.dashed)
        if (e.kind == LabelKind::ImpliedLetter || e.kind == LabelKind::Tie) {
            e.kind = LabelKind::Free;
            e.label.clear();
        }
    return out;
}

std::vector<std::string> weight_conditions(const CaseTemplate& t, const std::vector<LinearMap>& maps) {
    const Variables vars = variables_of(t);
    const std::size_t m = vars.names.size();
    auto evaluate = [&](const std::vector<Rational>& x) {
        std::vector<Rational> edge_values;
        for (auto v : vars.of_edge) edge_values.push_back(x[v]);
        return leibniz_residuals(LVAlgebra::unchecked(structure_matrix(t, edge_values)), maps);
    };
    std::vector<Rational> x(m);
    const std::vector<Rational> base = evaluate(x);
    std::vector<std::vector<Rational>> slope;
    for (std::size_t v = 0; v < m; ++v) {
        x[v] = 1;
        auto r = evaluate(x);
        for (std::size_t c = 0; c < r.size(); ++c) r[c] -= base[c];
        slope.push_back(std::move(r));
        x[v] = 0;
    }
    // Σ_v slope[v][c] x_v = −base[c]
    RatMatrix system(0, m + 1);
    std::vector<Rational> row(m + 1);
    for (std::size_t c = 0; c < base.size(); ++c) {
        bool any = sgn(base[c]) != 0;
        for (std::size_t v = 0; v < m; ++v) {
            row[v] = slope[v][c];
            any = any || sgn(row[v]) != 0;
        }
        row[m] = -base[c];
        if (any) system.push_row(row);
    }
    const EchelonForm ef = echelon(system);
    std::vector<std::string> out;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
        if (ef.pivots[r] == m) return {"inconsistent"};
        std::string lhs;
        for (std::size_t v = 0; v < m; ++v) {
            const Rational& c = ef.reduced(r, v);
            if (sgn(c) == 0) continue;
            lhs += sgn(c) < 0 ? (lhs.empty() ? "-" : " - ") : (lhs.empty() ? "" : " + ");
            if (abs(c) != 1) lhs += to_string(abs(c)) + "*";
            lhs += vars.names[v];
        }
        out.push_back(lhs + " = " + to_string(ef.reduced(r, m)));
    }
    return out;
}

CaseReport verify_case(const CaseTemplate& t, const std::vector<std::int64_t>& seeds, VerifyOptions opts) {
    if (seeds.empty()) throw std::invalid_argument("verify_case needs at least one seed");
    const DerivationSpec& spec = t.spec(opts.literal_table);
    const Subspace claim = spec_subspace(spec, t.n);

    CaseReport rep;
    rep.name = t.name;
    rep.claim = describe(spec);
    rep.literal_table = opts.literal_table && t.literal.has_value();
    rep.expected_dim = claim.dim();
    rep.subspace_match = true;

    bool diagnosed = false;
    for (auto seed : seeds) {
        const Instance inst = instantiate(t, seed);
        const DerivationSpace der = derivation_space(inst.algebra);
        const auto rules = all_rules(inst.algebra);
        const Subspace over = constrained_space(rules);

        SeedResult sr;
        sr.seed = seed;
        sr.assignment = inst.assignment;
        sr.computed_dim = der.dim();
        sr.subspace_match = der.space == claim;
        sr.rules_contain_kernel = subspace_contains(over, der.space);
        sr.rule_gap = over.dim() - der.dim();
        rep.seeds.push_back(sr);

        if (!sr.rules_contain_kernel)
            rep.discrepancies.push_back("structural rules exclude an exact derivation (seed " + std::to_string(seed) +
                                        ")");
        for (const auto& msg : dashed_pair_consistency(inst.algebra, der))
            rep.discrepancies.push_back("dashed-pair support check: " + msg + " (seed " + std::to_string(seed) + ")");
        if (!sr.subspace_match && !diagnosed) {
            diagnose(t, spec, claim, inst.algebra, der, seed, rep.discrepancies);
            diagnosed = true;
        }
        rep.subspace_match = rep.subspace_match && sr.subspace_match;
        rep.rule_gap = std::max(rep.rule_gap, sr.rule_gap);
    }
    rep.instantiation = rep.seeds.front().assignment;
    rep.computed_dim = rep.seeds.front().computed_dim;
    for (const auto& sr : rep.seeds) rep.seed_stable = rep.seed_stable && sr.computed_dim == rep.computed_dim;
    if (!rep.seed_stable) {
        std::vector<std::string> dims;
        for (const auto& sr : rep.seeds)
            dims.push_back("seed " + std::to_string(sr.seed) + ": " + std::to_string(sr.computed_dim));
        rep.discrepancies.push_back("dimension depends on the seed (" + join(dims, ", ") + ")");
    }

    if (t.literal) {
        if (rep.literal_table)
            rep.notes.push_back("literal table reading; the verified claim is " + describe(t.claim));
        else
            rep.notes.push_back("table cell read literally: " + describe(*t.literal));
    }
    for (const auto& e : t.dashed)
        if (e.kind == LabelKind::ImpliedLetter)
            rep.notes.push_back("undrawn edge " + pair_name(e.i, e.j) + " carries " + e.label);
    std::map<std::string, std::vector<std::string>> ties;
    for (const auto& e : t.dashed)
        if (e.kind == LabelKind::Tie) ties[e.label].push_back(pair_name(e.i, e.j));
    for (const auto& [name, edges] : ties)
        rep.notes.push_back("undrawn edges " + join(edges, ",") + " share weight " + name);
    if (t.has_undrawn_constraints()) {
        const Instance loose = instantiate(untied(t), seeds.front());
        rep.notes.push_back("with every undrawn edge generic: dim " +
                            std::to_string(derivation_space(loose.algebra).dim()));
    }
    return rep;
}

bool OrientationSearch::frozen_matches() const {
    return std::find(matching.begin(), matching.end(), 0u) != matching.end();
}

OrientationSearch resolve_orientation(const CaseTemplate& t, std::int64_t seed, bool literal_table) {
    const Subspace claim = spec_subspace(t.spec(literal_table), t.n);
    OrientationSearch out;
    out.edges = t.dashed.size();
    for (std::uint32_t flips = 0; flips < (1u << out.edges); ++flips) {
        CaseTemplate variant = t;
        for (std::size_t e = 0; e < out.edges; ++e)
            if ((flips >> e) & 1u) std::swap(variant.dashed[e].i, variant.dashed[e].j);
        if (derivation_space(instantiate(variant, seed).algebra).space == claim) out.matching.push_back(flips);
    }
    return out;
}

std::vector<PatternClass> enumerate_patterns(std::size_t n) {
    if (n < 1 || n > kMaxCensusVertices)
        throw DimensionError("pattern census supports 1 <= n <= " + std::to_string(kMaxCensusVertices) +
                             ", got n = " + std::to_string(n));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    auto graph_for = [&](std::uint64_t mask) {
        std::vector<Edge> records;
        std::size_t used = 0;
        for (std::size_t s = 0; s < pairs.size(); ++s)
            if ((mask >> s) & 1u) records.push_back({pairs[s].first, pairs[s].second, pool_value(used++)});
        return WeightedGraph::from_edges(n, records);
    };

    std::map<std::uint64_t, std::size_t> reps;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) ++reps[canonical_pattern(graph_for(mask))];

    std::map<std::uint64_t, std::vector<std::string>> shapes;
    if (n == kN)
        for (const auto& c : builtin_cases())
            shapes[canonical_pattern(graph_of(instantiate(c, 0).algebra))].push_back(c.name);

    std::vector<PatternClass> out;
    for (const auto& [mask, count] : reps) {
        PatternClass pc;
        pc.mask = mask;
        pc.dashed = static_cast<std::size_t>(std::popcount(mask));
        pc.representatives = count;
        if (auto it = shapes.find(mask); it != shapes.end()) pc.cases = it->second;
        out.push_back(std::move(pc));
    }
    std::stable_sort(out.begin(), out.end(), [](const PatternClass& a, const PatternClass& b) {
        return a.dashed != b.dashed ? a.dashed < b.dashed : a.mask < b.mask;
    });
    const auto dims =
        parallel_map(out.size(), [&](std::size_t c) { return derivation_space(algebra_of(graph_for(out[c].mask))).dim(); });
    for (std::size_t c = 0; c < out.size(); ++c) out[c].generic_dim = dims[c];
    return out;
}

}  // namespace lvder
