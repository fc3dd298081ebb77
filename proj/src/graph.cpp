#include "secdom/graph.hpp"

#include <ostream>
#include <sstream>
#include <string>

#include "secdom/errors.hpp"

namespace secdom {

// ---------------------------------------------------------------- VertexSet

VertexSet VertexSet::prefix(int n) {
    VertexSet s;
    for (int i = 0; i < kWords && n > 0; ++i, n -= 64)
        s.words_[i] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v < 0 || v >= kMaxVertices)
        throw GraphError("vertex " + std::to_string(v) + " outside set capacity");
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v < 0 || v >= kMaxVertices) return;
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::next_member(int from) const {
    if (from >= kMaxVertices) return kMaxVertices;
    int w = from >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (bits != 0) return (w << 6) + std::countr_zero(bits);
        if (++w == kWords) return kMaxVertices;
        bits = words_[w];
    }
}

Vertex VertexSet::last() const {
    for (int w = kWords - 1; w >= 0; --w)
        if (words_[w] != 0) return (w << 6) + 63 - std::countl_zero(words_[w]);
    return -1;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
        if (*ia != *ib) return *ia < *ib;
    return ia == a.end() && ib != b.end();
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    os << '{';
    bool first = true;
    for (Vertex v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    return os << '}';
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n < 0 ? 0 : n)) {
    if (n < 0 || n > kMaxVertices)
        throw GraphError("vertex count " + std::to_string(n) + " out of range");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside [0," + std::to_string(n) + ")");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (!adj_[u].contains(v)) {
            adj_[u].insert(v);
            adj_[v].insert(u);
            ++m_;
        }
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    return u >= 0 && u < n_ && adj_[u].contains(v);
}

int Graph::degree(Vertex v) const { return neighbors(v).size(); }

VertexSet Graph::neighbors(Vertex v, bool closed) const {
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    VertexSet s = adj_[v];
    if (closed) s.insert(v);
    return s;
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
    VertexSet out = s;
    for (Vertex v : s) out |= adj_[v];
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (v > u) out.emplace_back(u, v);
    return out;
}

void Graph::require_valid(const VertexSet& s) const {
    if (!valid(s))
        throw GraphError("set " + s.to_string() + " has members outside a graph of order " +
                         std::to_string(n_));
}

VertexSet InducedSubgraph::lift(const VertexSet& local) const {
    VertexSet out;
    for (Vertex v : local) out.insert(preimage.at(static_cast<std::size_t>(v)));
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    g.require_valid(keep);
    InducedSubgraph sub;
    sub.preimage = keep.to_vector();
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < sub.preimage.size(); ++i)
        local[static_cast<std::size_t>(sub.preimage[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sub.preimage.size(); ++i)
        for (Vertex w : g.row(sub.preimage[i]) & keep)
            if (local[static_cast<std::size_t>(w)] > static_cast<int>(i))
                edges.emplace_back(static_cast<int>(i), local[static_cast<std::size_t>(w)]);
    sub.graph = Graph(static_cast<int>(sub.preimage.size()), edges);
    return sub;
}

Graph disjoint_union(std::span<const Graph> parts) {
    int n = 0;
    std::vector<Edge> edges;
    for (const Graph& part : parts) {
        for (auto [u, v] : part.edges()) edges.emplace_back(u + n, v + n);
        n += part.order();
    }
    return Graph(n, edges);
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp{unseen.first()};
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.row(v);
            next -= comp;
            comp |= next;
            frontier = next;
        }
        unseen -= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

bool set_predicate(const Graph& g, const VertexSet& x, SetKind kind) {
    g.require_valid(x);
    for (Vertex v : x) {
        VertexSet others = x;
        others.erase(v);
        if (kind == SetKind::independent ? g.row(v).intersects(others)
                                         : !others.is_subset_of(g.row(v)))
            return false;
    }
    return true;
}

}  // namespace secdom
