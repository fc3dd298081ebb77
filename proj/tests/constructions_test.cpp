#include "secdom/constructions.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "secdom/errors.hpp"
#include "secdom/generators.hpp"

namespace secdom {
namespace {

Graph c5() { return gen_basic(BasicFamily::Cycle, 5); }

Graph from_sizes(Graph (*gen)(std::span<const int>), std::vector<int> sizes) { return gen(sizes); }

TEST(RationalTest, FloorAndSum) {
    Rational three_halves{3, 2};
    EXPECT_EQ(three_halves.floor(), 1);
    EXPECT_DOUBLE_EQ(three_halves.value(), 1.5);
    EXPECT_EQ(three_halves + three_halves, (Rational{3, 1}));
    EXPECT_EQ((Rational{3, 1} + Rational{9, 2}).floor(), 7);
}

TEST(P5FreeTest, C5TraceHasOneStep) {
    auto r = sds_p5_free(c5());
    EXPECT_EQ(r.set, (VertexSet{0, 2, 4}));
    EXPECT_EQ(r.bound, (Rational{3, 1}));
    ASSERT_TRUE(r.trace.has_value());
    EXPECT_EQ(r.trace->initial, (VertexSet{0, 2}));
    EXPECT_EQ(r.trace->initial_a_size, 2);
    ASSERT_EQ(r.trace->steps.size(), 1U);
    const TraceStep& st = r.trace->steps[0];
    EXPECT_EQ(st.threshold, 2);
    EXPECT_EQ(st.v, 1);
    EXPECT_EQ(st.u, 0);
    EXPECT_EQ(st.x, 4);
    EXPECT_EQ(st.size_s_after, 3);
    EXPECT_EQ(st.size_a_after, 0);
    EXPECT_TRUE(verify_certificate(c5(), r.certificate));
}

TEST(P5FreeTest, DisjointCyclesMeetBoundExactly) {
    for (int k = 1; k <= 3; ++k) {
        auto r = sds_p5_free(gen_disjoint_c5(k));
        EXPECT_EQ(r.size(), 3 * k);
        EXPECT_EQ(r.bound.floor(), 3 * k);
    }
}

TEST(P5FreeTest, SecureIndependentSetNeedsNoSteps) {
    Graph star = gen_basic(BasicFamily::Star, 5);
    auto r = sds_p5_free(star);
    EXPECT_EQ(r.set, (VertexSet{1, 2, 3, 4}));
    ASSERT_TRUE(r.trace.has_value());
    EXPECT_TRUE(r.trace->steps.empty());
}

TEST(P5FreeTest, RejectsP5) {
    EXPECT_THROW(sds_p5_free(gen_basic(BasicFamily::Path, 5)), ClassValidationError);
    ConstructOptions skip{false};
    EXPECT_EQ(sds_p5_free(c5(), skip).set, (VertexSet{0, 2, 4}));
}

TEST(P3P2FreeTest, Examples) {
    auto r = sds_p3p2_free(c5());
    EXPECT_EQ(r.size(), 3);
    EXPECT_EQ(r.bound, (Rational{3, 1}));
    auto k23 = sds_p3p2_free(from_sizes(gen_complete_multipartite, {2, 3}));
    EXPECT_EQ(k23.set, (VertexSet{2, 3, 4}));
    EXPECT_THROW(sds_p3p2_free(gen_basic(BasicFamily::Path, 6)), ClassValidationError);
}

TEST(P3P1FreeTest, Examples) {
    Graph k33 = from_sizes(gen_complete_multipartite, {3, 3});
    ASSERT_TRUE(in_class(k33, ConstructClass::P3UP1Free));
    auto r = sds_p3p1_free(k33);
    EXPECT_EQ(r.set, (VertexSet{0, 1, 2}));
    EXPECT_EQ(r.bound, (Rational{3, 1}));
    auto r2 = sds_p3p1_free(c5());
    EXPECT_EQ(r2.size(), 3);
    EXPECT_THROW(sds_p3p1_free(gen_basic(BasicFamily::Path, 5)), ClassValidationError);
}

TEST(K2U2K1FreeTest, Examples) {
    Graph k333 = from_sizes(gen_complete_multipartite, {3, 3, 3});
    ASSERT_TRUE(in_class(k333, ConstructClass::K2U2K1Free));
    auto r = sds_k2_2k1_free(k333);
    EXPECT_EQ(r.set, (VertexSet{0, 1, 2}));
    EXPECT_THROW(sds_k2_2k1_free(Graph(5, {{0, 1}})), ClassValidationError);
}

TEST(P5C3FreeTest, CycleExpansions) {
    struct Case {
        std::vector<int> sizes;
        int alpha;
    };
    for (const auto& [sizes, alpha] : std::vector<Case>{{{1, 1, 1, 1, 1}, 2},
                                                        {{2, 1, 1, 1, 1}, 3},
                                                        {{3, 1, 1, 1, 1}, 4},
                                                        {{2, 2, 1, 1, 1}, 3},
                                                        {{2, 2, 2, 2, 2}, 4},
                                                        {{3, 3, 3, 3, 3}, 6}}) {
        Graph g = gen_cycle_expansion(sizes);
        auto r = sds_p5_c3_free(g);
        EXPECT_EQ(independence_number(g), alpha);
        EXPECT_LE(r.size(), std::max(3, alpha));
        EXPECT_TRUE(verify_certificate(g, r.certificate));
    }
    EXPECT_THROW(sds_p5_c3_free(gen_disjoint_c5(2)), ClassValidationError);
    EXPECT_THROW(sds_p5_c3_free(gen_basic(BasicFamily::Complete, 3)), ClassValidationError);
}

TEST(P5C3FreeTest, CycleExpansionPartition) {
    Graph g = from_sizes(gen_cycle_expansion, {2, 1, 2, 1, 1});
    auto part = cycle_expansion_partition(g, {0, 2, 3, 5, 6});
    EXPECT_EQ(part.parts[0], (VertexSet{0, 1}));
    EXPECT_EQ(part.parts[2], (VertexSet{3, 4}));
    EXPECT_EQ(part.parts[4], (VertexSet{6}));
    Graph with_pendant(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
    EXPECT_THROW(cycle_expansion_partition(with_pendant, {0, 1, 2, 3, 4}), InvariantViolation);
}

TEST(P5PawFreeTest, MultipartiteAndTriangleFree) {
    Graph k222 = from_sizes(gen_complete_multipartite, {2, 2, 2});
    auto r = sds_p5_paw_free(k222);
    EXPECT_EQ(r.size(), 2);
    EXPECT_LE(sds_p5_paw_free(c5()).size(), 3);
    Graph paw = canonical_pattern_graph(Pattern::Paw);
    EXPECT_THROW(sds_p5_paw_free(paw), ClassValidationError);
}

TEST(P5C4FreeTest, BuoysAndApex) {
    for (auto sizes : std::vector<std::vector<int>>{{1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {2, 2, 2, 2, 2}, {3, 1, 2, 1, 3}}) {
        Graph g = gen_complete_buoy(sizes);
        auto r = sds_p5_c4_free(g);
        EXPECT_EQ(r.size(), 3);
    }
    Graph base = from_sizes(gen_complete_buoy, {2, 1, 1, 1, 1});
    std::vector<Edge> edges = base.edges();
    for (Vertex v = 0; v < 6; ++v) edges.emplace_back(v, 6);
    edges.emplace_back(6, 7);
    Graph g(8, edges);
    auto r = sds_p5_c4_free(g);
    EXPECT_LE(r.size(), 3);
    EXPECT_TRUE(verify_certificate(g, r.certificate));
    EXPECT_THROW(sds_p5_c4_free(gen_basic(BasicFamily::Cycle, 4)), ClassValidationError);
}

TEST(ConstructForClassTest, ComponentwiseBoundsAndErrors) {
    auto r = construct_for_class(gen_disjoint_c5(2), ConstructClass::P5C3Free);
    EXPECT_EQ(r.size(), 6);
    EXPECT_EQ(r.bound, (Rational{6, 1}));
    EXPECT_THROW(construct_for_class(c5(), "nope"), ClassValidationError);
    EXPECT_THROW(construct_for_class(gen_basic(BasicFamily::Path, 5), "p5-free"), ClassValidationError);
    EXPECT_EQ(construct_for_class(c5(), "p5-free").set, (VertexSet{0, 2, 4}));
    for (ConstructClass c : kConstructClasses)
        EXPECT_EQ(parse_construct_class(construct_class_name(c)), c);
}

int floor_bound(ConstructClass c, int alpha) {
    switch (c) {
        case ConstructClass::P5Free: return 3 * alpha / 2;
        case ConstructClass::P3UP2Free: return alpha + 1;
        default: return std::max(3, alpha);
    }
}

// Every in-class labeled graph on up to six vertices, each component for the
// connected-only classes, checked against brute-force α and γs.
TEST(ConstructionProperty, ExhaustiveBoundsAgainstOracle) {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_labeled(n)) {
            auto a = oracle::from(g);
            const int alpha = oracle::alpha(a);
            const int gs = oracle::gamma_s(a);
            for (ConstructClass c : kConstructClasses) {
                if (!in_class(g, c)) continue;
                if (needs_connected(c) && !is_connected(g)) continue;
                auto r = construct_for_class(g, c);
                ASSERT_TRUE(oracle::secure(a, oracle::mask_of(r.set))) << construct_class_name(c);
                ASSERT_LE(r.size(), floor_bound(c, alpha)) << construct_class_name(c);
                ASSERT_GE(r.size(), gs);
                if ((c == ConstructClass::P3UP1Free || c == ConstructClass::K2U2K1Free) && alpha >= 3)
                    EXPECT_EQ(oracle::mask_of(r.set), oracle::first_maximum_independent(a));
            }
        }
    }
}

}  // namespace
}  // namespace secdom
