#include "secdom/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "secdom/errors.hpp"

namespace secdom {

namespace {

struct PatternRow {
    Pattern kind;
    std::string_view name;
    int order;
    std::vector<Edge> edges;
};

const std::vector<PatternRow>& pattern_table() {
    static const std::vector<PatternRow> table = {
        {Pattern::P3, "P3", 3, {{0, 1}, {1, 2}}},
        {Pattern::P4, "P4", 4, {{0, 1}, {1, 2}, {2, 3}}},
        {Pattern::P5, "P5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
        {Pattern::C3, "C3", 3, {{0, 1}, {1, 2}, {0, 2}}},
        {Pattern::C4, "C4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
        {Pattern::C5, "C5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}},
        {Pattern::K2, "K2", 2, {{0, 1}}},
        {Pattern::TwoK2, "2K2", 4, {{0, 1}, {2, 3}}},
        {Pattern::ThreeK1, "3K1", 3, {}},
        {Pattern::Claw, "claw", 4, {{0, 1}, {0, 2}, {0, 3}}},
        {Pattern::Paw, "paw", 4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}},
        {Pattern::P3UP1, "P3UP1", 4, {{0, 1}, {1, 2}}},
        {Pattern::P3UP2, "P3UP2", 5, {{0, 1}, {1, 2}, {3, 4}}},
        {Pattern::K2U2K1, "K2U2K1", 4, {{0, 1}}},
    };
    return table;
}

const PatternRow& row_of(Pattern p) {
    for (const auto& r : pattern_table())
        if (r.kind == p) return r;
    throw GraphError("unknown pattern");
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.row(v).size());
    std::sort(d.begin(), d.end());
    return d;
}

// Host-side degrees within the chosen subset.
std::vector<int> sorted_degrees_within(const Graph& g, const std::vector<Vertex>& subset,
                                       int& edge_count) {
    VertexSet s = VertexSet::from_range(subset);
    std::vector<int> d;
    int twice = 0;
    for (Vertex v : subset) {
        int k = g.row(v).intersection_size(s);
        d.push_back(k);
        twice += k;
    }
    edge_count = twice / 2;
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

std::string_view pattern_name(Pattern p) { return row_of(p).name; }

std::optional<Pattern> parse_pattern(std::string_view name) {
    const std::string key = lower(name);
    for (const auto& r : pattern_table())
        if (lower(r.name) == key) return r.kind;
    return std::nullopt;
}

Graph canonical_pattern_graph(Pattern p) {
    const auto& r = row_of(p);
    return Graph(r.order, r.edges);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (sorted_degrees(a) != sorted_degrees(b)) return false;
    if (a.order() > 9) throw GraphError("isomorphic() is limited to 9 vertices");
    std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (is_induced_embedding(b, a, perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

PatternSpec::PatternSpec(Pattern kind) : kind_(kind), graph_(canonical_pattern_graph(kind)) {}

PatternSpec::PatternSpec(Pattern kind, Graph graph) : kind_(kind), graph_(std::move(graph)) {
    if (graph_.order() > 5 || !isomorphic(graph_, canonical_pattern_graph(kind)))
        throw GraphError("graph does not match pattern " + std::string(pattern_name(kind)));
}

std::string_view PatternSpec::name() const { return pattern_name(kind_); }

bool is_induced_embedding(const Graph& g, const Graph& pattern, const Embedding& e) {
    if (static_cast<int>(e.size()) != pattern.order()) return false;
    VertexSet seen;
    for (Vertex v : e) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (int i = 0; i < pattern.order(); ++i)
        for (int j = i + 1; j < pattern.order(); ++j)
            if (pattern.adjacent(i, j) != g.adjacent(e[static_cast<std::size_t>(i)],
                                                     e[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

std::optional<Embedding> contains_induced(const Graph& g, const PatternSpec& p) {
    const Graph& pat = p.graph();
    const int k = pat.order();
    const int n = g.order();
    if (k > n) return std::nullopt;
    if (k == 0) return Embedding{};
    const auto pattern_degrees = sorted_degrees(pat);

    std::vector<Vertex> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        int edges = 0;
        if (sorted_degrees_within(g, idx, edges) == pattern_degrees && edges == pat.size()) {
            Embedding perm = idx;
            do {
                if (is_induced_embedding(g, pat, perm)) return perm;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        // Next k-subset in lexicographic order.
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

std::optional<Embedding> contains_induced(const Graph& g, Pattern p) {
    return contains_induced(g, PatternSpec(p));
}

bool free_of(const Graph& g, std::span<const PatternSpec> ps) {
    return std::none_of(ps.begin(), ps.end(),
                        [&](const PatternSpec& p) { return contains_induced(g, p).has_value(); });
}

bool free_of(const Graph& g, std::initializer_list<Pattern> ps) {
    std::vector<PatternSpec> specs;
    for (Pattern p : ps) specs.emplace_back(p);
    return free_of(g, specs);
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.row(v)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<std::vector<VertexSet>> is_complete_multipartite(const Graph& g) {
    auto parts = components(complement(g));
    for (const auto& part : parts)
        if (!is_independent(g, part)) return std::nullopt;
    return parts;
}

std::string_view class_name(GraphClass c) {
    switch (c) {
        case GraphClass::ClawFree: return "claw-free";
        case GraphClass::C3Free: return "c3-free";
        case GraphClass::PawFree: return "paw-free";
        case GraphClass::Bipartite: return "bipartite";
        case GraphClass::C5Free: return "c5-free";
        case GraphClass::P5Free: return "p5-free";
        case GraphClass::P3UP2Free: return "p3up2-free";
        case GraphClass::P3UP1Free: return "p3up1-free";
        case GraphClass::K2U2K1Free: return "k2u2k1-free";
        case GraphClass::P5PawFree: return "p5paw-free";
        case GraphClass::P5C4Free: return "p5c4-free";
        case GraphClass::Split: return "split";
        case GraphClass::CompleteMultipartite: return "complete-multipartite";
        case GraphClass::Connected: return "connected";
    }
    return "?";
}

bool ClassReport::consistent() const {
    auto f = [&](GraphClass c) { return flags.at(c); };
    if (f(GraphClass::P5PawFree) != (f(GraphClass::P5Free) && f(GraphClass::PawFree))) return false;
    if (f(GraphClass::Split) && !f(GraphClass::C5Free)) return false;
    if (f(GraphClass::CompleteMultipartite) && !f(GraphClass::PawFree)) return false;
    return true;
}

ClassReport classify(const Graph& g) {
    auto has = [&](Pattern p) { return contains_induced(g, p).has_value(); };
    ClassReport r;
    r.flags[GraphClass::ClawFree] = !has(Pattern::Claw);
    r.flags[GraphClass::C3Free] = !has(Pattern::C3);
    r.flags[GraphClass::PawFree] = !has(Pattern::Paw);
    r.flags[GraphClass::Bipartite] = is_bipartite(g);
    r.flags[GraphClass::C5Free] = !has(Pattern::C5);
    r.flags[GraphClass::P5Free] = !has(Pattern::P5);
    r.flags[GraphClass::P3UP2Free] = !has(Pattern::P3UP2);
    r.flags[GraphClass::P3UP1Free] = !has(Pattern::P3UP1);
    r.flags[GraphClass::K2U2K1Free] = !has(Pattern::K2U2K1);
    r.flags[GraphClass::P5PawFree] = free_of(g, {Pattern::P5, Pattern::Paw});
    r.flags[GraphClass::P5C4Free] = free_of(g, {Pattern::P5, Pattern::C4});
    r.flags[GraphClass::Split] = free_of(g, {Pattern::TwoK2, Pattern::C4, Pattern::C5});
    r.flags[GraphClass::CompleteMultipartite] = is_complete_multipartite(g).has_value();
    r.flags[GraphClass::Connected] = is_connected(g);
    return r;
}

// ------------------------------------------------------------------ buoys

VertexSet BuoyDecomposition::vertices() const {
    VertexSet s;
    for (const auto& p : parts) s |= p;
    return s;
}

bool is_buoy_of(const Graph& g, const BuoyDecomposition& b) {
    VertexSet seen;
    for (const auto& p : b.parts) {
        if (p.empty() || !g.valid(p) || p.intersects(seen) || !is_clique(g, p)) return false;
        seen |= p;
    }
    for (int i = 0; i < 5; ++i) {
        const auto& a = b.parts[static_cast<std::size_t>(i)];
        const auto& next = b.parts[static_cast<std::size_t>((i + 1) % 5)];
        const auto& skip = b.parts[static_cast<std::size_t>((i + 2) % 5)];
        for (Vertex v : a) {
            if (!next.is_subset_of(g.row(v))) return false;
            if (g.row(v).intersects(skip)) return false;
        }
    }
    return true;
}

namespace {

// Slot i admits w when w sees all of parts i-1, i, i+1 and none of i+2, i+3.
std::optional<int> admissible_slot(const Graph& g, const std::array<VertexSet, 5>& parts, Vertex w) {
    const VertexSet& nw = g.row(w);
    for (int i = 0; i < 5; ++i) {
        auto at = [&](int k) -> const VertexSet& { return parts[static_cast<std::size_t>((i + k) % 5)]; };
        if (at(4).is_subset_of(nw) && at(0).is_subset_of(nw) && at(1).is_subset_of(nw) &&
            !nw.intersects(at(2)) && !nw.intersects(at(3)))
            return i;
    }
    return std::nullopt;
}

}  // namespace

BuoyDecomposition grow_buoy(const Graph& g, const Embedding& seed, const VertexSet& within) {
    if (seed.size() != 5) throw GraphError("buoy seed must be a 5-cycle");
    BuoyDecomposition b;
    for (std::size_t i = 0; i < 5; ++i) b.parts[i] = VertexSet{seed[i]};
    bool grew = true;
    while (grew) {
        grew = false;
        for (Vertex w : within - b.vertices()) {
            if (auto slot = admissible_slot(g, b.parts, w)) {
                b.parts[static_cast<std::size_t>(*slot)].insert(w);
                grew = true;
            }
        }
    }
    return b;
}

std::optional<BuoyDecomposition> find_buoy(const Graph& g) {
    auto cycle = contains_induced(g, Pattern::C5);
    if (!cycle) return std::nullopt;
    BuoyDecomposition b;
    std::array<VertexSet, 5> seed;
    for (std::size_t i = 0; i < 5; ++i) {
        seed[i] = VertexSet{(*cycle)[i]};
        b.parts[i] = seed[i];
    }
    for (Vertex w : g.vertices() - b.vertices()) {
        auto slot = admissible_slot(g, seed, w);
        if (!slot) return std::nullopt;
        b.parts[static_cast<std::size_t>(*slot)].insert(w);
    }
    if (!is_buoy_of(g, b)) return std::nullopt;
    return b;
}

FouquetDecomposition fouquet_decompose(const Graph& g) {
    if (!is_connected(g)) throw ClassValidationError("buoy decomposition needs a connected graph");
    if (!free_of(g, {Pattern::P5, Pattern::C4}))
        throw ClassValidationError("buoy decomposition needs a (P5,C4)-free graph");

    FouquetDecomposition out;
    VertexSet remaining = g.vertices();
    while (true) {
        auto sub = induced_subgraph(g, remaining);
        auto cycle = contains_induced(sub.graph, Pattern::C5);
        if (!cycle) break;
        Embedding seed;
        for (Vertex v : *cycle) seed.push_back(sub.preimage[static_cast<std::size_t>(v)]);
        BuoyDecomposition b = grow_buoy(g, seed, remaining);
        const VertexSet bv = b.vertices();
        if (!is_buoy_of(g, b)) throw InvariantViolation("grown buoy breaks the buoy invariants");
        VertexSet outside_nbrs;
        for (Vertex v : bv) outside_nbrs |= g.row(v);
        outside_nbrs -= bv;
        for (Vertex w : outside_nbrs)
            if (!bv.is_subset_of(g.row(w)))
                throw InvariantViolation("buoy " + bv.to_string() + " is not homogeneous (vertex " +
                                         std::to_string(w) + ")");
        if (!is_clique(g, outside_nbrs))
            throw InvariantViolation("buoy " + bv.to_string() + " has a non-clique neighborhood");
        remaining -= bv;
        out.buoys.push_back(b);
    }
    out.v1 = remaining;
    for (const auto& b : out.buoys) {
        VertexSet nb;
        for (Vertex v : b.vertices()) nb |= g.row(v);
        nb -= b.vertices();
        if (!nb.is_subset_of(out.v1))
            throw InvariantViolation("two buoys are adjacent");
    }
    if (contains_induced(induced_subgraph(g, out.v1).graph, Pattern::C4))
        throw InvariantViolation("V1 contains an induced C4");
    return out;
}

}  // namespace secdom
