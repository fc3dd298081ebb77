#pragma once

// Brute-force reference implementations for tests. They work on plain
// bitmask adjacency rebuilt from the edge list and share no code with the
// library's search routines.

#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "secdom/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Adj {
    int n = 0;
    std::vector<Mask> rows;

    Mask all() const { return n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
    bool adj(int u, int v) const { return (rows[u] >> v) & 1U; }
};

inline Adj from(const secdom::Graph& g) {
    Adj a{g.order(), std::vector<Mask>(static_cast<std::size_t>(g.order()), 0)};
    for (auto [u, v] : g.edges()) {
        a.rows[u] |= Mask{1} << v;
        a.rows[v] |= Mask{1} << u;
    }
    return a;
}

inline Mask mask_of(const secdom::VertexSet& s) {
    Mask m = 0;
    for (int v : s) m |= Mask{1} << v;
    return m;
}

inline bool dominating(const Adj& a, Mask s) {
    for (int v = 0; v < a.n; ++v)
        if (!((s >> v) & 1U) && (a.rows[v] & s) == 0) return false;
    return true;
}

inline bool defended(const Adj& a, Mask s, int v) {
    for (int u = 0; u < a.n; ++u)
        if (((s >> u) & 1U) && a.adj(u, v) && dominating(a, (s & ~(Mask{1} << u)) | (Mask{1} << v)))
            return true;
    return false;
}

inline bool secure(const Adj& a, Mask s) {
    if (!dominating(a, s)) return false;
    for (int v = 0; v < a.n; ++v)
        if (!((s >> v) & 1U) && !defended(a, s, v)) return false;
    return true;
}

inline bool independent(const Adj& a, Mask s) {
    for (int v = 0; v < a.n; ++v)
        if (((s >> v) & 1U) && (a.rows[v] & s) != 0) return false;
    return true;
}

inline Mask epn(const Adj& a, Mask d, int u) {
    Mask out = 0;
    for (int v = 0; v < a.n; ++v)
        if (!((d >> v) & 1U) && (a.rows[v] & d) == (Mask{1} << u)) out |= Mask{1} << v;
    return out;
}

// A_D per definition: members of d with an undefended outside neighbor.
inline Mask a_set(const Adj& a, Mask d) {
    Mask out = 0;
    for (int v = 0; v < a.n; ++v)
        if (!((d >> v) & 1U) && !defended(a, d, v)) out |= a.rows[v] & d;
    return out;
}

// Ascending-sequence lexicographic comparison of two masks.
inline bool lex_less(Mask x, Mask y) {
    while (x != 0 && y != 0) {
        int a = std::countr_zero(x), b = std::countr_zero(y);
        if (a != b) return a < b;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

// Smallest cardinality satisfying pred; ties broken by lexicographic order.
template <typename Pred>
Mask first_minimum(const Adj& a, Pred pred) {
    Mask best = a.all();
    int best_size = a.n + 1;
    for (Mask s = 0; s <= a.all(); ++s) {
        const int k = std::popcount(s);
        if (k <= best_size && pred(s) && (k < best_size || lex_less(s, best))) {
            best = s;
            best_size = k;
        }
        if (s == a.all()) break;
    }
    return best;
}

inline Mask first_maximum_independent(const Adj& a) {
    Mask best = 0;
    int best_size = -1;
    for (Mask s = 0; s <= a.all(); ++s) {
        const int k = std::popcount(s);
        if (k >= best_size && independent(a, s) && (k > best_size || lex_less(s, best))) {
            best = s;
            best_size = k;
        }
        if (s == a.all()) break;
    }
    return best;
}

inline int alpha(const Adj& a) { return std::popcount(first_maximum_independent(a)); }
inline int gamma(const Adj& a) {
    return std::popcount(first_minimum(a, [&](Mask s) { return dominating(a, s); }));
}
inline int gamma_s(const Adj& a) {
    return std::popcount(first_minimum(a, [&](Mask s) { return secure(a, s); }));
}

// Induced copy of `pat` in `host` by depth-first injective assignment.
inline bool has_induced(const Adj& host, const Adj& pat) {
    std::vector<int> map(static_cast<std::size_t>(pat.n), -1);
    auto rec = [&](auto&& self, int i, Mask used) -> bool {
        if (i == pat.n) return true;
        for (int h = 0; h < host.n; ++h) {
            if ((used >> h) & 1U) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = pat.adj(i, j) == host.adj(h, map[j]);
            if (!ok) continue;
            map[i] = h;
            if (self(self, i + 1, used | (Mask{1} << h))) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace oracle
