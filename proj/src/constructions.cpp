#include "secdom/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "secdom/errors.hpp"
#include "secdom/patterns.hpp"

namespace secdom {

Rational Rational::operator+(const Rational& o) const {
    Rational r{num * o.den + o.num * den, den * o.den};
    const std::int64_t d = std::gcd(r.num, r.den);
    if (d > 1) {
        r.num /= d;
        r.den /= d;
    }
    return r;
}

namespace {

Rational whole(std::int64_t v) { return {v, 1}; }
Rational max_three_alpha(int alpha) { return whole(std::max(3, alpha)); }

ConstructionResult finish(const Graph& g, const VertexSet& set, Rational bound,
                          std::optional<AlgorithmTrace> trace = std::nullopt) {
    auto check = is_secure_dominating(g, set);
    if (!check)
        throw InvariantViolation("constructed set " + set.to_string() +
                                 " is not secure dominating (vertex " +
                                 std::to_string(*check.failing_vertex) + ")");
    if (set.size() > bound.floor())
        throw InvariantViolation("constructed set " + set.to_string() + " exceeds bound " +
                                 std::to_string(bound.value()));
    return ConstructionResult{set, std::move(*check.certificate), bound, std::move(trace)};
}

void require(bool ok, const char* what) {
    if (!ok) throw ClassValidationError(what);
}

void require_connected_free_of(const Graph& g, std::initializer_list<Pattern> ps, const char* what) {
    require(is_connected(g), "input graph is not connected");
    require(free_of(g, ps), what);
}

// Exact fallback for branches whose γs ≤ α guarantee comes from outside the
// constructive argument (C5-free and complete multipartite graphs).
VertexSet exact_within_alpha(const Graph& g) {
    VertexSet s = min_secure_dominating_set(g).set;
    if (s.size() > independence_number(g))
        throw InvariantViolation("exact γs exceeds α on a branch where γs ≤ α must hold");
    return s;
}

VertexSet p3p2_core(const Graph& g, const VertexSet& alpha_set) {
    const VertexSet a = ab_partition(g, alpha_set).a_set;
    if (a.empty()) return alpha_set;
    const Vertex u = a.first();
    const VertexSet private_nbrs = epn(g, alpha_set, u);
    if (private_nbrs.empty()) throw InvariantViolation("member of A_I with empty epn");
    VertexSet s = alpha_set;
    s.insert(private_nbrs.first());
    return s;
}

// ---------------------------------------------------------- (P5,C3)-free

// Relabeling of the cycle positions: label k of the argument refers to
// position map[k] of the found cycle.
using Relabel = std::array<int, 5>;

Relabel rotation(int shift) {
    Relabel r{};
    for (int k = 0; k < 5; ++k) r[static_cast<std::size_t>(k)] = (k + shift) % 5;
    return r;
}

// Reflection of labels through label `fixed`, composed with `base`.
Relabel reflect(const Relabel& base, int fixed) {
    Relabel r{};
    for (int k = 0; k < 5; ++k)
        r[static_cast<std::size_t>(k)] = base[static_cast<std::size_t>(((2 * fixed - k) % 5 + 5) % 5)];
    return r;
}

VertexSet p5c3_core(const Graph& g) {
    auto found = contains_induced(g, Pattern::C5);
    if (!found) return exact_within_alpha(g);

    std::array<Vertex, 5> cycle{};
    std::copy(found->begin(), found->end(), cycle.begin());
    auto u = [&](const Relabel& r, int label) { return cycle[static_cast<std::size_t>(r[static_cast<std::size_t>(label)])]; };
    const Relabel identity = rotation(0);

    if (g.order() == 5) return VertexSet{u(identity, 0), u(identity, 1), u(identity, 3)};

    const auto partition = cycle_expansion_partition(g, cycle);
    std::array<int, 5> sizes{};
    for (std::size_t i = 0; i < 5; ++i) sizes[i] = partition.parts[i].size();
    auto size_at = [&](const Relabel& r, int label) { return sizes[static_cast<std::size_t>(r[static_cast<std::size_t>(label)])]; };
    const int alpha = independence_number(g);

    if (alpha >= 5) return VertexSet::from_range(cycle);

    if (alpha == 4) {
        if (*std::max_element(sizes.begin(), sizes.end()) > 3)
            throw InvariantViolation("cycle expansion part larger than 3 with α = 4");
        const auto big = std::find(sizes.begin(), sizes.end(), 3);
        Relabel r = identity;
        if (big != sizes.end()) {
            // The size-3 part takes label 1 (u2); label 0 (u1) must have size <= 2.
            r = rotation(static_cast<int>(big - sizes.begin()) + 4);
            if (size_at(r, 0) > 2) r = reflect(r, 1);
            if (size_at(r, 3) != 1 || size_at(r, 4) != 1 || size_at(r, 0) > 2)
                throw InvariantViolation("cycle expansion with α = 4 has an unexpected shape");
        }
        return VertexSet{u(r, 0), u(r, 1), u(r, 2), u(r, 3)};
    }

    if (alpha != 3) throw InvariantViolation("cycle expansion larger than C5 with α < 3");
    const auto doubled = std::find(sizes.begin(), sizes.end(), 2);
    if (doubled == sizes.end() || *std::max_element(sizes.begin(), sizes.end()) > 2)
        throw InvariantViolation("cycle expansion with α = 3 has an unexpected shape");
    // The doubled part takes label 0 (u1); label 4 (u5) must be a singleton.
    Relabel r = rotation(static_cast<int>(doubled - sizes.begin()));
    if (size_at(r, 4) != 1) r = reflect(r, 0);
    if (size_at(r, 2) != 1 || size_at(r, 3) != 1 || size_at(r, 4) != 1)
        throw InvariantViolation("cycle expansion with α = 3 has an unexpected shape");
    return VertexSet{u(r, 0), u(r, 1), u(r, 3)};
}

// ---------------------------------------------------------- (P5,C4)-free

// Picks two members of `pool` to drop, preferring the ones about to be
// re-added so the cardinality is preserved.
std::pair<Vertex, Vertex> pick_two(const VertexSet& pool, std::initializer_list<Vertex> preferred) {
    std::vector<Vertex> order;
    for (Vertex p : preferred)
        if (pool.contains(p)) order.push_back(p);
    for (Vertex v : pool)
        if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    if (order.size() < 2) throw InvariantViolation("fewer than two set vertices inside the buoy");
    return {order[0], order[1]};
}

VertexSet p5c4_core(const Graph& g) {
    if (g.order() == 0) return {};
    const FouquetDecomposition f = fouquet_decompose(g);
    if (f.buoys.empty()) return exact_within_alpha(g);

    const BuoyDecomposition* chosen = nullptr;
    VertexSet nb;
    for (const auto& b : f.buoys) {
        VertexSet around;
        for (Vertex v : b.vertices()) around |= g.row(v);
        around -= b.vertices();
        if (!around.empty()) {
            chosen = &b;
            nb = around;
            break;
        }
    }
    if (chosen == nullptr) {
        // Connected with an isolated buoy: G is a complete buoy, γs = 3.
        auto three = secure_dominating_set_of_size(g, 3);
        if (!three) throw InvariantViolation("complete buoy without a secure dominating 3-set");
        return three->set;
    }

    const auto& parts = chosen->parts;
    const VertexSet b = chosen->vertices();
    auto h2 = induced_subgraph(g, g.vertices() - parts[4]);
    if (!is_connected(h2.graph)) throw InvariantViolation("G - A5 is disconnected");
    VertexSet s = h2.lift(p5c4_core(h2.graph));

    const VertexSet in_b = s & b;
    if (!s.intersects(nb)) {
        const Vertex a2 = parts[1].first();
        const Vertex x = nb.first();
        auto [p, q] = pick_two(in_b, {a2});
        s.erase(p);
        s.erase(q);
        s.insert(a2);
        s.insert(x);
    } else if (in_b.size() >= 2) {
        const Vertex a2 = parts[1].first();
        const Vertex a4 = parts[3].first();
        auto [p, q] = pick_two(in_b, {a2, a4});
        s.erase(p);
        s.erase(q);
        s.insert(a2);
        s.insert(a4);
    }
    if (!is_secure_dominating(g, s))
        throw InvariantViolation("buoy peel produced a set that is not secure dominating");
    return s;
}

ConstructionResult run_class(const Graph& g, ConstructClass c, ConstructOptions opts) {
    switch (c) {
        case ConstructClass::P5Free: return sds_p5_free(g, opts);
        case ConstructClass::P3UP2Free: return sds_p3p2_free(g, opts);
        case ConstructClass::P3UP1Free: return sds_p3p1_free(g, opts);
        case ConstructClass::K2U2K1Free: return sds_k2_2k1_free(g, opts);
        case ConstructClass::P5C3Free: return sds_p5_c3_free(g, opts);
        case ConstructClass::P5PawFree: return sds_p5_paw_free(g, opts);
        case ConstructClass::P5C4Free: return sds_p5_c4_free(g, opts);
    }
    throw ClassValidationError("unknown class");
}

}  // namespace

CycleExpansionPartition cycle_expansion_partition(const Graph& g, const std::array<Vertex, 5>& cycle) {
    CycleExpansionPartition out;
    out.cycle = cycle;
    VertexSet on_cycle;
    for (std::size_t i = 0; i < 5; ++i) {
        on_cycle.insert(cycle[i]);
        out.parts[i] = VertexSet{cycle[i]};
    }
    for (Vertex v : g.vertices() - on_cycle) {
        std::vector<int> seen;
        for (int j = 0; j < 5; ++j)
            if (g.adjacent(v, cycle[static_cast<std::size_t>(j)])) seen.push_back(j);
        // Non-consecutive pair {i-1, i+1} puts v in part i.
        int slot = -1;
        if (seen.size() == 2) {
            const int gap = seen[1] - seen[0];
            if (gap == 2) slot = seen[0] + 1;
            else if (gap == 3) slot = (seen[1] + 1) % 5;
        }
        if (slot < 0) {
            std::string seen_text;
            for (int j : seen) seen_text += std::to_string(cycle[static_cast<std::size_t>(j)]) + " ";
            throw InvariantViolation("vertex " + std::to_string(v) + " sees cycle vertices [" +
                                     seen_text + "], expected two non-consecutive ones");
        }
        out.parts[static_cast<std::size_t>(slot)].insert(v);
    }
    return out;
}

ConstructionResult sds_p5_free(const Graph& g, ConstructOptions opts) {
    if (opts.validate) require(free_of(g, {Pattern::P5}), "input graph contains an induced P5");

    const VertexSet alpha_set = max_independent_set(g);
    const int alpha = alpha_set.size();
    std::vector<int> count_in_i(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        count_in_i[static_cast<std::size_t>(v)] = g.row(v).intersection_size(alpha_set);

    AlgorithmTrace trace;
    trace.initial = alpha_set;
    VertexSet s = alpha_set;
    int a_size = ab_partition(g, s).a_set.size();
    trace.initial_a_size = a_size;

    int i = 2;
    while (i <= alpha) {
        const VertexSet undefended = undefended_vertices(g, s);
        std::optional<Vertex> pick;
        for (Vertex w : undefended) {
            const int k = g.row(w).intersection_size(s);
            if (k != count_in_i[static_cast<std::size_t>(w)])
                throw InvariantViolation("undefended vertex " + std::to_string(w) +
                                         " gained neighbors in S since the start");
            if (k == i && !pick) pick = w;
        }
        if (!pick) {
            ++i;
            continue;
        }
        const Vertex v = *pick;
        const Vertex u = (g.row(v) & s).first();
        const VertexSet candidates = epn(g, s, u) - g.row(v);
        if (candidates.empty())
            throw InvariantViolation("no vertex in epn(u,S) - N(v) for v = " + std::to_string(v));
        const Vertex x = candidates.first();

        s.insert(x);
        const ABPartition after = ab_partition(g, s);
        if (!after.b_set.contains(u) || !after.b_set.contains(x))
            throw InvariantViolation("inserted pair did not land in B_S");
        if (after.a_set.size() > a_size - 2)
            throw InvariantViolation("|A_S| dropped by less than two");
        a_size = after.a_set.size();
        trace.steps.push_back({i, v, u, x, s.size(), a_size});
    }
    return finish(g, s, Rational{3 * static_cast<std::int64_t>(alpha), 2}, std::move(trace));
}

ConstructionResult sds_p3p2_free(const Graph& g, ConstructOptions opts) {
    if (opts.validate) require(free_of(g, {Pattern::P3UP2}), "input graph contains an induced P3∪P2");
    const VertexSet alpha_set = max_independent_set(g);
    return finish(g, p3p2_core(g, alpha_set), whole(alpha_set.size() + 1));
}

ConstructionResult sds_p3p1_free(const Graph& g, ConstructOptions opts) {
    if (opts.validate) require(free_of(g, {Pattern::P3UP1}), "input graph contains an induced P3∪P1");
    const VertexSet alpha_set = max_independent_set(g);
    const int alpha = alpha_set.size();
    return finish(g, alpha >= 3 ? alpha_set : p3p2_core(g, alpha_set), max_three_alpha(alpha));
}

ConstructionResult sds_k2_2k1_free(const Graph& g, ConstructOptions opts) {
    if (opts.validate) require(free_of(g, {Pattern::K2U2K1}), "input graph contains an induced K2∪2K1");
    const VertexSet alpha_set = max_independent_set(g);
    const int alpha = alpha_set.size();
    return finish(g, alpha >= 3 ? alpha_set : p3p2_core(g, alpha_set), max_three_alpha(alpha));
}

ConstructionResult sds_p5_c3_free(const Graph& g, ConstructOptions opts) {
    if (opts.validate)
        require_connected_free_of(g, {Pattern::P5, Pattern::C3}, "input graph is not (P5,C3)-free");
    return finish(g, p5c3_core(g), max_three_alpha(independence_number(g)));
}

ConstructionResult sds_p5_paw_free(const Graph& g, ConstructOptions opts) {
    if (opts.validate)
        require_connected_free_of(g, {Pattern::P5, Pattern::Paw}, "input graph is not (P5,paw)-free");
    VertexSet s;
    if (is_complete_multipartite(g)) {
        s = exact_within_alpha(g);
    } else {
        if (contains_induced(g, Pattern::C3))
            throw InvariantViolation("paw-free component is neither triangle-free nor complete multipartite");
        s = p5c3_core(g);
    }
    return finish(g, s, max_three_alpha(independence_number(g)));
}

ConstructionResult sds_p5_c4_free(const Graph& g, ConstructOptions opts) {
    if (opts.validate)
        require_connected_free_of(g, {Pattern::P5, Pattern::C4}, "input graph is not (P5,C4)-free");
    return finish(g, p5c4_core(g), max_three_alpha(independence_number(g)));
}

std::string_view construct_class_name(ConstructClass c) {
    switch (c) {
        case ConstructClass::P5Free: return "p5-free";
        case ConstructClass::P3UP2Free: return "p3up2-free";
        case ConstructClass::P3UP1Free: return "p3up1-free";
        case ConstructClass::K2U2K1Free: return "k2u2k1-free";
        case ConstructClass::P5C3Free: return "p5c3-free";
        case ConstructClass::P5PawFree: return "p5paw-free";
        case ConstructClass::P5C4Free: return "p5c4-free";
    }
    return "?";
}

std::optional<ConstructClass> parse_construct_class(std::string_view name) {
    for (ConstructClass c : kConstructClasses)
        if (construct_class_name(c) == name) return c;
    return std::nullopt;
}

bool needs_connected(ConstructClass c) {
    return c == ConstructClass::P5C3Free || c == ConstructClass::P5PawFree ||
           c == ConstructClass::P5C4Free;
}

std::vector<Pattern> class_patterns(ConstructClass c) {
    switch (c) {
        case ConstructClass::P5Free: return {Pattern::P5};
        case ConstructClass::P3UP2Free: return {Pattern::P3UP2};
        case ConstructClass::P3UP1Free: return {Pattern::P3UP1};
        case ConstructClass::K2U2K1Free: return {Pattern::K2U2K1};
        case ConstructClass::P5C3Free: return {Pattern::P5, Pattern::C3};
        case ConstructClass::P5PawFree: return {Pattern::P5, Pattern::Paw};
        case ConstructClass::P5C4Free: return {Pattern::P5, Pattern::C4};
    }
    return {};
}

bool in_class(const Graph& g, ConstructClass c) {
    std::vector<PatternSpec> specs;
    for (Pattern p : class_patterns(c)) specs.emplace_back(p);
    return free_of(g, specs);
}

ConstructionResult construct_for_class(const Graph& g, ConstructClass c, ConstructOptions opts) {
    if (opts.validate && !in_class(g, c))
        throw ClassValidationError("input graph is not " + std::string(construct_class_name(c)));
    ConstructOptions inner{false};
    if (!needs_connected(c)) return run_class(g, c, inner);

    VertexSet s;
    Rational bound{0, 1};
    for (const VertexSet& comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        auto part = run_class(sub.graph, c, inner);
        s |= sub.lift(part.set);
        bound = bound + part.bound;
    }
    return finish(g, s, bound);
}

ConstructionResult construct_for_class(const Graph& g, std::string_view class_name, ConstructOptions opts) {
    auto c = parse_construct_class(class_name);
    if (!c) throw ClassValidationError("unknown class '" + std::string(class_name) + "'");
    return construct_for_class(g, *c, opts);
}

}  // namespace secdom
