#include "secdom/formats.hpp"

#include <gtest/gtest.h>

#include "secdom/errors.hpp"
#include "secdom/generators.hpp"

namespace secdom {
namespace {

Graph c5() { return gen_basic(BasicFamily::Cycle, 5); }

TEST(Graph6Test, KnownEncodings) {
    EXPECT_EQ(to_graph6(c5()), "Dhc");
    EXPECT_EQ(from_graph6("Dhc"), c5());
    EXPECT_EQ(from_graph6(">>graph6<<Dhc\n"), c5());
    EXPECT_EQ(to_graph6(Graph(0, {})), "?");
    EXPECT_EQ(to_graph6(Graph(1, {})), "@");
    EXPECT_EQ(to_graph6(Graph(2, {{0, 1}})), "A_");
}

TEST(Graph6Test, LargeHeader) {
    Graph g = gen_basic(BasicFamily::Path, 70);
    std::string text = to_graph6(g);
    EXPECT_EQ(text.substr(0, 4), std::string("~") + static_cast<char>(63) + static_cast<char>(64) +
                                     static_cast<char>(63 + 6));
    EXPECT_EQ(from_graph6(text), g);
}

TEST(Graph6Test, Malformed) {
    EXPECT_THROW(from_graph6(""), ParseError);
    EXPECT_THROW(from_graph6("Dh"), ParseError);
    EXPECT_THROW(from_graph6("Dhcc"), ParseError);
    EXPECT_THROW(from_graph6("D h"), ParseError);
    EXPECT_THROW(from_graph6("Dhd"), ParseError);
}

TEST(EdgeListTest, EmitAndParse) {
    EXPECT_EQ(to_edge_list(gen_basic(BasicFamily::Path, 3)), "3 2\n0 1\n1 2\n");
    EXPECT_EQ(from_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"), c5());
    EXPECT_EQ(from_edge_list("3 0\n"), Graph(3, {}));
}

TEST(EdgeListTest, Malformed) {
    EXPECT_THROW(from_edge_list(""), ParseError);
    EXPECT_THROW(from_edge_list("3 2\n0 1\n"), ParseError);
    EXPECT_THROW(from_edge_list("3 1\n0 x\n"), ParseError);
    EXPECT_THROW(from_edge_list("-3 0\n"), ParseError);
    EXPECT_THROW(from_edge_list("3 1\n0 3\n"), GraphError);
    EXPECT_THROW(from_edge_list("3 1\n1 1\n"), GraphError);
}

TEST(FormatsTest, DetectionAndDocuments) {
    EXPECT_EQ(detect_format("Dhc"), GraphFormat::Graph6);
    EXPECT_EQ(detect_format("\n5 0\n"), GraphFormat::EdgeList);
    EXPECT_EQ(parse_format_name("edge-list"), GraphFormat::EdgeList);
    EXPECT_EQ(format_name(GraphFormat::Graph6), "graph6");
    EXPECT_FALSE(parse_format_name("dot").has_value());
    GraphDocument doc = emit_graph(c5(), GraphFormat::Graph6);
    EXPECT_EQ(doc.payload, "Dhc");
    EXPECT_EQ(parse_graph(doc), c5());
}

TEST(FormatsProperty, RoundTripsOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const int n = static_cast<int>(seed % 80);
        Graph g = gen_random(n, static_cast<double>(seed % 11) / 10.0, seed);
        const std::string g6 = to_graph6(g);
        ASSERT_EQ(from_graph6(g6), g);
        ASSERT_EQ(to_graph6(from_graph6(g6)), g6);
        const std::string el = to_edge_list(g);
        ASSERT_EQ(from_edge_list(el), g);
        ASSERT_EQ(to_edge_list(from_edge_list(el)), el);
    }
}

}  // namespace
}  // namespace secdom
