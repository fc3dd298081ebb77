#pragma once

#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string_view>
#include <vector>

#include "secdom/graph.hpp"
#include "secdom/patterns.hpp"

namespace secdom {

enum class BasicFamily { Path, Cycle, Star, Complete };

std::optional<BasicFamily> parse_basic_family(std::string_view name);

// Path and cycle use consecutive indices; the star has center 0 and n-1
// leaves. Throws GraphError for n < 1, or n < 3 for a cycle.
Graph gen_basic(BasicFamily family, int n);

// k disjoint copies of C5; copy j occupies vertices 5j..5j+4. k = 0 gives
// the empty graph.
Graph gen_disjoint_c5(int k);

// Parts get consecutive index ranges in the order given.
Graph gen_complete_multipartite(std::span<const int> sizes);

// C5 blown up by cliques A1..A5 (consecutive index ranges).
Graph gen_complete_buoy(std::span<const int> sizes);

// C5 blown up by independent sets U1..U5 (consecutive index ranges).
Graph gen_cycle_expansion(std::span<const int> sizes);

inline constexpr int kDefaultAttemptBudget = 10000;

struct RandomClassSpec {
    int n = 0;
    double p = 0.5;
    std::vector<Pattern> forbidden;
    bool connected = false;
    std::uint64_t seed = 0;
    int attempt_budget = kDefaultAttemptBudget;
};

// Rejection sampling: each attempt draws every pair in column order with
// probability p from a SplitMix-seeded mt19937_64 stream, rejecting samples
// that contain a forbidden pattern (or are disconnected, if requested).
// Absent when the budget runs out.
std::optional<Graph> gen_random_class(const RandomClassSpec& spec);

// Plain G(n, p) draw from the same stream layout, no rejection.
Graph gen_random(int n, double p, std::uint64_t seed);

// SECDOM_ATTEMPT_BUDGET if set to a positive integer, else the default.
int attempt_budget_from_env();

// Labeled graphs on n vertices are indexed by bitmasks over the pairs in
// column order (0,1), (0,2), (1,2), (0,3), ... with bit k for the k-th pair.
inline constexpr int kMaxEnumerationOrder = 7;

std::uint64_t labeled_graph_count(int n);
Graph labeled_graph(int n, std::uint64_t mask);

// All 2^(n choose 2) labeled graphs in mask order, as a lazy view. Throws
// GraphError for n > 7.
inline auto enumerate_labeled(int n) {
    const std::uint64_t count = labeled_graph_count(n);
    return std::views::iota(std::uint64_t{0}, count) |
           std::views::transform([n](std::uint64_t mask) { return labeled_graph(n, mask); });
}

}  // namespace secdom
