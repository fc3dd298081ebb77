#include "secdom/graph.hpp"

#include <gtest/gtest.h>

#include "secdom/errors.hpp"
#include "secdom/generators.hpp"

namespace secdom {
namespace {

Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

TEST(GraphTest, EmptyGraph) {
    Graph g(0, {});
    EXPECT_EQ(g.order(), 0);
    EXPECT_EQ(g.size(), 0);
    EXPECT_TRUE(components(g).empty());
}

TEST(GraphTest, CycleHasDegreeTwoEverywhere) {
    Graph g = c5();
    EXPECT_EQ(g.size(), 5);
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(GraphTest, RejectsSelfLoopAndOutOfRange) {
    EXPECT_THROW(Graph(3, {{0, 0}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
    EXPECT_THROW(Graph(3, {{-1, 2}}), GraphError);
    EXPECT_THROW(Graph(kMaxVertices + 1, {}), GraphError);
}

TEST(GraphTest, DuplicateEdgesAreMerged) {
    Graph g(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    EXPECT_EQ(g.size(), 2);
    EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
}

TEST(GraphTest, Neighborhoods) {
    Graph g = c5();
    EXPECT_EQ(g.neighbors(0), (VertexSet{1, 4}));
    EXPECT_EQ(g.neighbors(0, true), (VertexSet{0, 1, 4}));
    Graph isolated(3, {{0, 1}});
    EXPECT_TRUE(isolated.neighbors(2).empty());
    EXPECT_THROW(g.neighbors(5), GraphError);
}

TEST(GraphTest, InducedSubgraph) {
    auto p4 = induced_subgraph(c5(), {0, 1, 2, 3});
    EXPECT_EQ(p4.graph, gen_basic(BasicFamily::Path, 4));
    EXPECT_EQ(p4.preimage, (std::vector<Vertex>{0, 1, 2, 3}));

    auto shifted = induced_subgraph(c5(), {1, 3, 4});
    EXPECT_EQ(shifted.graph, Graph(3, {{1, 2}}));
    EXPECT_EQ(shifted.lift({0, 2}), (VertexSet{1, 4}));

    EXPECT_EQ(induced_subgraph(c5(), {}).graph.order(), 0);
    EXPECT_EQ(induced_subgraph(c5(), c5().vertices()).graph, c5());
    EXPECT_THROW(induced_subgraph(c5(), {7}), GraphError);
}

TEST(GraphTest, DisjointUnion) {
    std::vector<Graph> two{c5(), c5()};
    Graph u = disjoint_union(two);
    EXPECT_EQ(u.order(), 10);
    EXPECT_EQ(u.size(), 10);
    EXPECT_EQ(components(u).size(), 2U);
    std::vector<Graph> one{c5()};
    EXPECT_EQ(disjoint_union(one), c5());
    EXPECT_EQ(disjoint_union(std::vector<Graph>{}).order(), 0);
}

TEST(GraphTest, Components) {
    std::vector<Graph> two{c5(), c5()};
    auto comps = components(disjoint_union(two));
    ASSERT_EQ(comps.size(), 2U);
    EXPECT_EQ(comps[0], (VertexSet{0, 1, 2, 3, 4}));
    EXPECT_EQ(comps[1], (VertexSet{5, 6, 7, 8, 9}));
    EXPECT_EQ(components(gen_basic(BasicFamily::Complete, 4)).size(), 1U);
    auto singles = components(Graph(3, {}));
    ASSERT_EQ(singles.size(), 3U);
    EXPECT_EQ(singles[2], (VertexSet{2}));
}

TEST(GraphTest, SetPredicates) {
    Graph g = c5();
    EXPECT_TRUE(is_independent(g, {0, 2}));
    EXPECT_TRUE(is_clique(g, {0, 1}));
    EXPECT_FALSE(is_independent(g, {0, 1, 2}));
    EXPECT_TRUE(is_independent(g, {}));
    EXPECT_TRUE(is_clique(g, {}));
    EXPECT_TRUE(is_independent(g, {3}));
    EXPECT_TRUE(is_clique(g, {3}));
}

TEST(VertexSetTest, LexOrderAndIteration) {
    VertexSet a{0, 2, 9}, b{0, 3}, c{0, 2};
    EXPECT_TRUE(lex_less(a, b));
    EXPECT_TRUE(lex_less(c, a));
    EXPECT_FALSE(lex_less(a, a));
    VertexSet far{1, 200, 511};
    EXPECT_EQ(far.to_vector(), (std::vector<Vertex>{1, 200, 511}));
    EXPECT_EQ(far.last(), 511);
    EXPECT_EQ(VertexSet::prefix(70).size(), 70);
    EXPECT_THROW(far.insert(512), GraphError);
}

// Randomized structural invariants.
TEST(GraphProperty, NeighborhoodComponentAndUnionInvariants) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = static_cast<int>(seed % 14);
        Graph g = gen_random(n, 0.05 + static_cast<double>(seed % 10) / 12.0, seed);
        for (Vertex v = 0; v < n; ++v) {
            EXPECT_FALSE(g.neighbors(v).contains(v));
            EXPECT_TRUE(g.neighbors(v, true).contains(v));
            for (Vertex w : g.row(v)) EXPECT_TRUE(g.adjacent(w, v));
        }
        auto id = induced_subgraph(g, g.vertices());
        EXPECT_EQ(id.graph, g);

        auto comps = components(g);
        VertexSet covered;
        for (const auto& c : comps) {
            EXPECT_FALSE(c.intersects(covered));
            covered |= c;
            for (Vertex v : c) EXPECT_TRUE(g.row(v).is_subset_of(c));
        }
        EXPECT_EQ(covered, g.vertices());

        Graph h = gen_random(n / 2 + 1, 0.4, seed + 1000);
        std::vector<Graph> gh{g, h}, hg{h, g};
        EXPECT_EQ(components(disjoint_union(gh)).size(), comps.size() + components(h).size());
        std::vector<Graph> left{disjoint_union(gh), g}, right{g, disjoint_union(std::vector<Graph>{h, g})};
        EXPECT_EQ(disjoint_union(left), disjoint_union(right));
    }
}

}  // namespace
}  // namespace secdom
