#include "lvder/rules.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace lvder;
using lvder::testing::algebra_from;
using lvder::testing::all_solid;
using lvder::testing::Gen;
using lvder::testing::q;

namespace {

bool has_tag(const ConstraintSet& cs, const std::string& tag) {
    return std::find(cs.provenance.begin(), cs.provenance.end(), tag) != cs.provenance.end();
}

/// Maps whose column k lies in `allowed[k]` (as coordinate sets) with zero
/// weight, built directly from differences of basis vectors.
Subspace columns_in(std::size_t n, const std::vector<IndexSet>& allowed) {
    std::vector<std::vector<Rational>> gens;
    for (std::size_t k = 0; k < n; ++k) {
        const auto items = allowed[k].items();
        for (std::size_t m = 1; m < items.size(); ++m) {
            std::vector<Rational> v(n * n);
            v[vec_index(n, items[0], k)] = 1;
            v[vec_index(n, items[m], k)] = -1;
            gens.push_back(v);
        }
    }
    return Subspace::span(n * n, gens);
}

}  // namespace

TEST(SupportConstraints, SolidAlgebraOnlyWeightRows) {
    const ConstraintSet cs = support_constraints(all_solid(5));
    EXPECT_EQ(cs.size(), 5u);
    EXPECT_EQ(constrained_space(cs).dim(), 20u);
    EXPECT_EQ(cs.provenance.size(), cs.size());
}

TEST(SupportConstraints, SingleDashedEdgeConfinesLaterColumns) {
    const LVAlgebra a = algebra_from(5, {{1, 2, q(1, 3)}});
    const Subspace s = constrained_space(support_constraints(a));
    const SupportSets ss = support_sets(a);
    EXPECT_EQ(s, columns_in(5, ss.nsets));
    for (std::size_t k = 2; k < 5; ++k) EXPECT_EQ(ss.nsets[k], IndexSet::of({2, 3, 4}));
    EXPECT_TRUE(has_tag(support_constraints(a), "support: lambda(1,3)=0, 1 not in N_3"));
}

TEST(SupportConstraints, FullyDashedForcesZero) {
    const LVAlgebra a = algebra_from(4, {{1, 2, q(1, 3)}, {1, 3, q(1, 3)}, {1, 4, q(1, 4)}, {2, 3, q(2, 3)},
                                         {2, 4, q(1, 5)}, {3, 4, q(1, 7)}});
    EXPECT_EQ(constrained_space(support_constraints(a)).dim(), 0u);
}

TEST(DashedPairConstraints, SingleDashedEdge) {
    const ConstraintSet cs = dashed_pair_constraints(algebra_from(5, {{1, 2, q(1, 3)}}));
    EXPECT_TRUE(has_tag(cs, "dashed {1,2}: |J|<=1, lambda(1,1)=0"));
    EXPECT_TRUE(has_tag(cs, "dashed {1,2}: |K|<=1, lambda(2,2)=0"));
    for (int t = 3; t <= 5; ++t)
        EXPECT_TRUE(has_tag(cs, "dashed {1,2}: lambda(" + std::to_string(t) + ",1)=lambda(" + std::to_string(t) +
                                    ",2) on I={3,4,5}"));
}

TEST(DashedPairConstraints, VertexWithSmallBlocksDies) {
    // {1,2} dashed, 1 solid only with 3: N_1 = {1,3} ∩ S_3. With 3 solid to
    // everything, I = N_1∩N_2 and J = N_1∖N_2 both have at most one element.
    const LVAlgebra a = algebra_from(4, {{1, 2, q(1, 3)}, {1, 4, q(1, 4)}});
    const SupportSets ss = support_sets(a);
    const IndexSet I = ss.nsets[0] & ss.nsets[1], J = ss.nsets[0] - ss.nsets[1];
    ASSERT_LE(I.size(), 1u);
    ASSERT_LE(J.size(), 1u);
    const Subspace s = constrained_space({support_constraints(a), dashed_pair_constraints(a)});
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t t = 0; t < 4; ++t) EXPECT_EQ(sgn(s.basis()(r, vec_index(4, t, 0))), 0);
}

TEST(DashedPairConstraints, NoneWithoutDashedPairs) { EXPECT_EQ(dashed_pair_constraints(all_solid(5)).size(), 0u); }

TEST(TriangleRules, SolidAlgebraEmitsNothing) {
    EXPECT_EQ(rule_g1(all_solid(5)).size(), 0u);
    EXPECT_EQ(rule_g2(all_solid(5)).size(), 0u);
}

TEST(TriangleRules, CrossWeightNeedsDistinctWeights) {
    // {2,3} solid, {1,2} and {1,3} dashed.
    const LVAlgebra distinct = algebra_from(3, {{1, 2, q(1, 3)}, {1, 3, q(1, 4)}});
    const LVAlgebra equal = algebra_from(3, {{1, 2, q(1, 3)}, {1, 3, q(1, 3)}});
    const ConstraintSet g1 = rule_g1(distinct);
    EXPECT_TRUE(has_tag(g1, "cross-weight triangle 1|2,3: lambda(3,2)=0"));
    EXPECT_TRUE(has_tag(g1, "cross-weight triangle 1|3,2: lambda(2,3)=0"));
    EXPECT_EQ(rule_g1(equal).size(), 0u);
    EXPECT_EQ(derivation_space(distinct).dim(), 0u);
    EXPECT_GT(derivation_space(equal).dim(), 0u);
}

TEST(TriangleRules, ApexTying) {
    const LVAlgebra a = algebra_from(5, {{1, 2, q(1, 3)}});
    const ConstraintSet g2 = rule_g2(a);
    for (int k = 3; k <= 5; ++k)
        EXPECT_TRUE(has_tag(g2, "apex triangle " + std::to_string(k) + "|1,2: lambda(" + std::to_string(k) +
                                    ",1)=lambda(" + std::to_string(k) + ",2)"));
    EXPECT_EQ(g2.size(), 3u);
}

TEST(ConstrainedSpace, Plumbing) {
    EXPECT_EQ(constrained_space(ConstraintSet(3)).dim(), 9u);
    EXPECT_THROW(constrained_space({ConstraintSet(2), ConstraintSet(3)}), DimensionError);
    const auto sets = all_rules(algebra_from(3, {{1, 2, q(1, 3)}, {1, 3, q(1, 4)}, {2, 3, q(1, 5)}}));
    EXPECT_EQ(constrained_space(sets).dim(), 0u);
}

TEST(RuleProperties, OverApproximateTheKernel) {
    Gen g(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const LVAlgebra a = g.algebra(g.index(3, 6), 0.5);
        const DerivationSpace der = derivation_space(a);
        const Subspace over = constrained_space(all_rules(a));
        ASSERT_TRUE(subspace_contains(over, der.space)) << "trial " << trial;
        ASSERT_TRUE(dashed_pair_consistency(a, der).empty()) << "trial " << trial;
    }
}

TEST(RuleProperties, IdempotentRowSpace) {
    Gen g(77);
    for (int trial = 0; trial < 40; ++trial) {
        const LVAlgebra a = g.algebra(g.index(3, 6), 0.5);
        for (const auto& cs : all_rules(a)) {
            ConstraintSet twice = cs;
            twice.merge(cs);
            ASSERT_EQ(Subspace::span(twice.rows), Subspace::span(cs.rows));
        }
    }
}
