#pragma once

#include <span>
#include <utility>
#include <vector>

#include "secdom/vertex_set.hpp"

namespace secdom {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1. Adjacency rows are
// bitsets, so pair queries and whole-neighborhood reads are O(1) in the
// number of edges.
class Graph {
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;

public:
    Graph() = default;
    // Duplicate edges (in either orientation) are merged. Throws GraphError on
    // an endpoint outside [0, n) or a self-loop.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    int size() const { return m_; }
    VertexSet vertices() const { return VertexSet::prefix(n_); }

    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    // Throws GraphError when v is out of range.
    VertexSet neighbors(Vertex v, bool closed = false) const;
    // Open-neighborhood row without range checks; hot paths only.
    const VertexSet& row(Vertex v) const { return adj_[v]; }
    // Union of closed neighborhoods of every member of s.
    VertexSet closed_neighborhood(const VertexSet& s) const;

    // Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    bool valid(const VertexSet& s) const { return s.is_subset_of(vertices()); }
    // Throws GraphError if s has a member >= n.
    void require_valid(const VertexSet& s) const;

    friend bool operator==(const Graph&, const Graph&) = default;
};

struct InducedSubgraph {
    Graph graph;
    // preimage[i] is the vertex of the parent graph that became vertex i.
    std::vector<Vertex> preimage;

    VertexSet lift(const VertexSet& local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

Graph disjoint_union(std::span<const Graph> parts);

// Connected components ordered by least vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

Graph complement(const Graph& g);

enum class SetKind { independent, clique };

// Empty sets and singletons satisfy both predicates.
bool set_predicate(const Graph& g, const VertexSet& x, SetKind kind);
inline bool is_independent(const Graph& g, const VertexSet& x) {
    return set_predicate(g, x, SetKind::independent);
}
inline bool is_clique(const Graph& g, const VertexSet& x) {
    return set_predicate(g, x, SetKind::clique);
}

}  // namespace secdom
