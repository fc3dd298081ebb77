#include "secdom/generators.hpp"

#include <cstdlib>
#include <random>
#include <string>

#include "secdom/errors.hpp"

namespace secdom {

namespace {

void require_positive_sizes(std::span<const int> sizes, const char* what) {
    for (int s : sizes)
        if (s < 1) throw GraphError(std::string(what) + ": every part size must be at least 1");
}

// Blow-up of C5: part i gets a consecutive range; parts i and i+1 are joined.
Graph c5_blowup(std::span<const int> sizes, bool parts_are_cliques, const char* what) {
    if (sizes.size() != 5) throw GraphError(std::string(what) + ": need exactly five part sizes");
    require_positive_sizes(sizes, what);
    std::array<int, 6> start{};
    for (std::size_t i = 0; i < 5; ++i) start[i + 1] = start[i] + sizes[i];
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 5; ++i) {
        const std::size_t j = (i + 1) % 5;
        for (int a = start[i]; a < start[i + 1]; ++a) {
            if (parts_are_cliques)
                for (int b = a + 1; b < start[i + 1]; ++b) edges.emplace_back(a, b);
            for (int b = start[j]; b < start[j + 1]; ++b) edges.emplace_back(a, b);
        }
    }
    return Graph(start[5], edges);
}

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph draw(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (unit(rng) < p) edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::optional<BasicFamily> parse_basic_family(std::string_view name) {
    if (name == "path") return BasicFamily::Path;
    if (name == "cycle") return BasicFamily::Cycle;
    if (name == "star") return BasicFamily::Star;
    if (name == "complete") return BasicFamily::Complete;
    return std::nullopt;
}

Graph gen_basic(BasicFamily family, int n) {
    if (n < 1) throw GraphError("generator needs n >= 1");
    std::vector<Edge> edges;
    switch (family) {
        case BasicFamily::Path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case BasicFamily::Cycle:
            if (n < 3) throw GraphError("cycle needs n >= 3");
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            break;
        case BasicFamily::Star:
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        case BasicFamily::Complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
    }
    return Graph(n, edges);
}

Graph gen_disjoint_c5(int k) {
    if (k < 0) throw GraphError("copy count must be non-negative");
    std::vector<Graph> copies(static_cast<std::size_t>(k), gen_basic(BasicFamily::Cycle, 5));
    return disjoint_union(copies);
}

Graph gen_complete_multipartite(std::span<const int> sizes) {
    if (sizes.empty()) throw GraphError("complete multipartite graph needs at least one part");
    require_positive_sizes(sizes, "complete multipartite");
    std::vector<int> part_of;
    for (std::size_t p = 0; p < sizes.size(); ++p) part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
    const int n = static_cast<int>(part_of.size());
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[static_cast<std::size_t>(a)] != part_of[static_cast<std::size_t>(b)]) edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph gen_complete_buoy(std::span<const int> sizes) { return c5_blowup(sizes, true, "complete buoy"); }

Graph gen_cycle_expansion(std::span<const int> sizes) { return c5_blowup(sizes, false, "cycle expansion"); }

Graph gen_random(int n, double p, std::uint64_t seed) {
    if (n < 0 || n > kMaxVertices) throw GraphError("vertex count out of range");
    std::mt19937_64 rng(splitmix(seed));
    return draw(n, p, rng);
}

std::optional<Graph> gen_random_class(const RandomClassSpec& spec) {
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw GraphError("edge probability must lie in [0,1]");
    if (spec.n < 0 || spec.n > kMaxVertices) throw GraphError("vertex count out of range");
    std::vector<PatternSpec> forbidden;
    for (Pattern p : spec.forbidden) forbidden.emplace_back(p);
    std::mt19937_64 rng(splitmix(spec.seed));
    for (int attempt = 0; attempt < spec.attempt_budget; ++attempt) {
        Graph g = draw(spec.n, spec.p, rng);
        if (spec.connected && !is_connected(g)) continue;
        if (free_of(g, forbidden)) return g;
    }
    return std::nullopt;
}

int attempt_budget_from_env() {
    if (const char* raw = std::getenv("SECDOM_ATTEMPT_BUDGET")) {
        char* end = nullptr;
        const long v = std::strtol(raw, &end, 10);
        if (end != raw && *end == '\0' && v > 0 && v <= 100'000'000) return static_cast<int>(v);
    }
    return kDefaultAttemptBudget;
}

std::uint64_t labeled_graph_count(int n) {
    if (n < 0 || n > kMaxEnumerationOrder)
        throw GraphError("labeled enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder));
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t mask) {
    if (mask >= labeled_graph_count(n)) throw GraphError("mask out of range");
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1U) edges.emplace_back(i, j);
    return Graph(n, edges);
}

}  // namespace secdom
