#include "secdom/domination.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "secdom/errors.hpp"

namespace secdom {

namespace {

// For each member u of s (in ascending order), the set dominated by s - u.
std::vector<VertexSet> dominated_without_each(const Graph& g, const std::vector<Vertex>& members) {
    const std::size_t k = members.size();
    std::vector<VertexSet> prefix(k + 1), suffix(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        VertexSet closed = g.row(members[i]);
        closed.insert(members[i]);
        prefix[i + 1] = prefix[i] | closed;
    }
    for (std::size_t i = k; i > 0; --i) {
        VertexSet closed = g.row(members[i - 1]);
        closed.insert(members[i - 1]);
        suffix[i - 1] = suffix[i] | closed;
    }
    std::vector<VertexSet> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = prefix[i] | suffix[i + 1];
    return out;
}

// Certificate for s, or the first undefended vertex. s must be dominating.
SecurityCheck check_defenses(const Graph& g, const VertexSet& s) {
    const VertexSet all = g.vertices();
    const auto members = s.to_vector();
    const auto without = dominated_without_each(g, members);
    DefenseCertificate cert{s, {}};
    for (Vertex v : all - s) {
        VertexSet closed_v = g.row(v);
        closed_v.insert(v);
        std::optional<Vertex> defender;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!g.row(v).contains(members[i])) continue;
            if (all.is_subset_of(without[i] | closed_v)) {
                defender = members[i];
                break;
            }
        }
        if (!defender) return SecurityCheck{std::nullopt, v};
        cert.defenders.emplace(v, *defender);
    }
    return SecurityCheck{std::move(cert), std::nullopt};
}

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order
// until visit returns true.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
    if (k < 0 || k > n) return false;
    std::vector<Vertex> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (visit(VertexSet::from_range(idx))) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

struct MisSearch {
    const Graph& g;
    VertexSet best;
    int best_size = -1;

    // Greedy clique cover of the candidates: an upper bound on their
    // independence number.
    int clique_cover_bound(VertexSet cand) const {
        int cliques = 0;
        while (!cand.empty()) {
            Vertex v = cand.first();
            VertexSet clique{v};
            VertexSet common = g.row(v) & cand;
            while (!common.empty()) {
                Vertex w = common.first();
                clique.insert(w);
                common &= g.row(w);
            }
            cand -= clique;
            ++cliques;
        }
        return cliques;
    }

    void run(const VertexSet& current, int current_size, const VertexSet& cand) {
        if (cand.empty()) {
            if (current_size > best_size) {
                best = current;
                best_size = current_size;
            }
            return;
        }
        if (current_size + cand.size() <= best_size) return;
        if (current_size + clique_cover_bound(cand) <= best_size) return;
        Vertex v = cand.first();
        VertexSet with = current;
        with.insert(v);
        VertexSet rest = cand;
        rest.erase(v);
        run(with, current_size + 1, rest - g.row(v));
        run(current, current_size, rest);
    }
};

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
    g.require_valid(s);
    return g.vertices().is_subset_of(g.closed_neighborhood(s));
}

VertexSet epn(const Graph& g, const VertexSet& d, Vertex u) {
    g.require_valid(d);
    if (!d.contains(u)) throw GraphError("epn: vertex " + std::to_string(u) + " is not in D");
    VertexSet others = d;
    others.erase(u);
    VertexSet out;
    for (Vertex v : g.row(u) - d)
        if (!g.row(v).intersects(others)) out.insert(v);
    return out;
}

std::optional<Vertex> defended_by(const Graph& g, const VertexSet& s, Vertex v) {
    if (v < 0 || v >= g.order()) throw GraphError("defended_by: vertex out of range");
    if (s.contains(v)) throw GraphError("defended_by: vertex " + std::to_string(v) + " is in S");
    if (!is_dominating(g, s)) throw GraphError("defended_by: S is not dominating");
    const VertexSet all = g.vertices();
    for (Vertex u : g.row(v) & s) {
        VertexSet swapped = s;
        swapped.erase(u);
        swapped.insert(v);
        if (all.is_subset_of(g.closed_neighborhood(swapped))) return u;
    }
    return std::nullopt;
}

SecurityCheck is_secure_dominating(const Graph& g, const VertexSet& s) {
    g.require_valid(s);
    VertexSet undominated = g.vertices() - g.closed_neighborhood(s);
    if (!undominated.empty()) return SecurityCheck{std::nullopt, undominated.first()};
    return check_defenses(g, s);
}

bool verify_certificate(const Graph& g, const DefenseCertificate& cert) {
    if (!g.valid(cert.set) || !is_dominating(g, cert.set)) return false;
    const VertexSet outside = g.vertices() - cert.set;
    if (static_cast<int>(cert.defenders.size()) != outside.size()) return false;
    for (auto [v, u] : cert.defenders) {
        if (!outside.contains(v) || !cert.set.contains(u) || !g.adjacent(u, v)) return false;
        VertexSet swapped = cert.set;
        swapped.erase(u);
        swapped.insert(v);
        if (!is_dominating(g, swapped)) return false;
    }
    return true;
}

VertexSet undefended_vertices(const Graph& g, const VertexSet& s) {
    if (!is_dominating(g, s)) throw GraphError("undefended_vertices: S is not dominating");
    const VertexSet all = g.vertices();
    const auto members = s.to_vector();
    const auto without = dominated_without_each(g, members);
    VertexSet out;
    for (Vertex v : all - s) {
        VertexSet closed_v = g.row(v);
        closed_v.insert(v);
        bool defended = false;
        for (std::size_t i = 0; i < members.size() && !defended; ++i)
            defended = g.row(v).contains(members[i]) && all.is_subset_of(without[i] | closed_v);
        if (!defended) out.insert(v);
    }
    return out;
}

ABPartition ab_partition(const Graph& g, const VertexSet& d) {
    if (!is_dominating(g, d)) throw GraphError("ab_partition: D is not dominating");
    ABPartition p;
    VertexSet touched;
    for (Vertex v : undefended_vertices(g, d)) touched |= g.row(v);
    p.a_set = d & touched;
    p.b_set = d - p.a_set;
    return p;
}

VertexSet max_independent_set(const Graph& g) {
    MisSearch search{g, {}, -1};
    search.run({}, 0, g.vertices());
    return search.best;
}

int independence_number(const Graph& g) { return max_independent_set(g).size(); }

VertexSet min_dominating_set(const Graph& g) {
    const int n = g.order();
    const VertexSet all = g.vertices();
    VertexSet found;
    for (int k = 0; k <= n; ++k) {
        bool hit = for_each_subset(n, k, [&](const VertexSet& s) {
            if (!all.is_subset_of(g.closed_neighborhood(s))) return false;
            found = s;
            return true;
        });
        if (hit) return found;
    }
    return all;
}

std::optional<DefenseCertificate> secure_dominating_set_of_size(const Graph& g, int k) {
    const VertexSet all = g.vertices();
    std::optional<DefenseCertificate> found;
    for_each_subset(g.order(), k, [&](const VertexSet& s) {
        if (!all.is_subset_of(g.closed_neighborhood(s))) return false;
        auto check = check_defenses(g, s);
        if (!check) return false;
        found = std::move(check.certificate);
        return true;
    });
    return found;
}

DefenseCertificate min_secure_dominating_set(const Graph& g) {
    const int n = g.order();
    for (int k = min_dominating_set(g).size(); k <= n; ++k)
        if (auto cert = secure_dominating_set_of_size(g, k)) return *cert;
    throw InvariantViolation("V(G) is always secure dominating");
}

}  // namespace secdom
