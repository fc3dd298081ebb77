#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "secdom/graph.hpp"

namespace secdom {

enum class Pattern {
    P3, P4, P5, C3, C4, C5, K2, TwoK2, ThreeK1, Claw, Paw, P3UP1, P3UP2, K2U2K1
};

// A forbidden induced pattern: a name and an explicit graph on at most five
// vertices. Construction checks the graph against the built-in table up to
// isomorphism.
class PatternSpec {
    Pattern kind_;
    Graph graph_;

public:
    explicit PatternSpec(Pattern kind);
    // Throws GraphError if `graph` is not isomorphic to the named pattern.
    PatternSpec(Pattern kind, Graph graph);

    Pattern kind() const { return kind_; }
    const Graph& graph() const { return graph_; }
    std::string_view name() const;
};

std::string_view pattern_name(Pattern p);
// Accepts the display names ("P3UP2", "2K2", "paw", ...) case-insensitively.
std::optional<Pattern> parse_pattern(std::string_view name);

// Canonical labeling used by the built-in table, e.g. P5 is 0-1-2-3-4 and
// paw is the triangle 012 with pendant 3 on vertex 0.
Graph canonical_pattern_graph(Pattern p);

bool isomorphic(const Graph& a, const Graph& b);

// embedding[i] is the host vertex playing pattern vertex i.
using Embedding = std::vector<Vertex>;

// Exhaustive search: host subsets of size |V(p)| in lexicographic order, then
// vertex assignments in lexicographic order. The first witness is returned.
std::optional<Embedding> contains_induced(const Graph& g, const PatternSpec& p);
std::optional<Embedding> contains_induced(const Graph& g, Pattern p);

bool free_of(const Graph& g, std::span<const PatternSpec> ps);
bool free_of(const Graph& g, std::initializer_list<Pattern> ps);

// True iff the embedding is injective and preserves adjacency and
// non-adjacency.
bool is_induced_embedding(const Graph& g, const Graph& pattern, const Embedding& e);

bool is_bipartite(const Graph& g);

// Parts ordered by least vertex; absent unless every complement component is
// independent in g. The empty graph yields an empty partition.
std::optional<std::vector<VertexSet>> is_complete_multipartite(const Graph& g);

// Rows of the bound table that classify() reports.
enum class GraphClass {
    ClawFree, C3Free, PawFree, Bipartite, C5Free, P5Free, P3UP2Free, P3UP1Free,
    K2U2K1Free, P5PawFree, P5C4Free, Split, CompleteMultipartite, Connected
};

inline constexpr std::array kAllClasses = {
    GraphClass::ClawFree,   GraphClass::C3Free,     GraphClass::PawFree,
    GraphClass::Bipartite,  GraphClass::C5Free,     GraphClass::P5Free,
    GraphClass::P3UP2Free,  GraphClass::P3UP1Free,  GraphClass::K2U2K1Free,
    GraphClass::P5PawFree,  GraphClass::P5C4Free,   GraphClass::Split,
    GraphClass::CompleteMultipartite, GraphClass::Connected};

std::string_view class_name(GraphClass c);

struct ClassReport {
    std::map<GraphClass, bool> flags;

    bool operator[](GraphClass c) const { return flags.at(c); }
    // (P5,paw)-free <=> P5-free and paw-free; split => C5-free;
    // complete multipartite => paw-free.
    bool consistent() const;
};

ClassReport classify(const Graph& g);

// A complete buoy: five non-empty cliques in cyclic order, consecutive parts
// completely joined, parts two apart anticomplete.
struct BuoyDecomposition {
    std::array<VertexSet, 5> parts;

    VertexSet vertices() const;
};

// Checks the buoy invariants of `b` against g restricted to b's vertices.
bool is_buoy_of(const Graph& g, const BuoyDecomposition& b);

// Present iff g itself is a complete buoy. Parts are seeded from the first
// induced C5, so they come back in that cycle's orientation.
std::optional<BuoyDecomposition> find_buoy(const Graph& g);

// V(G) = v1 + buoys for connected (P5,C4)-free graphs: every buoy is a
// maximal complete buoy, homogeneous, with a clique neighborhood inside v1.
struct FouquetDecomposition {
    VertexSet v1;
    std::vector<BuoyDecomposition> buoys;
};

// Throws ClassValidationError for disconnected or non-(P5,C4)-free input and
// InvariantViolation if the grown buoys break the structure guarantees.
FouquetDecomposition fouquet_decompose(const Graph& g);

// Grows the seed cycle (seed[i] in part i) to a maximal complete buoy inside
// `within`. Candidates are scanned in ascending order until none fits.
BuoyDecomposition grow_buoy(const Graph& g, const Embedding& seed, const VertexSet& within);

}  // namespace secdom
