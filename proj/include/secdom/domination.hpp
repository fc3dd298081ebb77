#pragma once

#include <map>
#include <optional>

#include "secdom/graph.hpp"

namespace secdom {

// Witness that `set` is a secure dominating set: every vertex outside it is
// mapped to a neighbor in it whose swap keeps the set dominating.
struct DefenseCertificate {
    VertexSet set;
    std::map<Vertex, Vertex> defenders;
};

// Re-checks every claim of the certificate against g.
bool verify_certificate(const Graph& g, const DefenseCertificate& cert);

bool is_dominating(const Graph& g, const VertexSet& s);

// D-external private neighbors of u: vertices outside d whose only
// neighbor in d is u. Throws GraphError unless u is in d.
VertexSet epn(const Graph& g, const VertexSet& d, Vertex u);

// Smallest u in N(v) ∩ s with (s - u) + v dominating, if any. Requires s
// dominating and v outside s; throws GraphError otherwise.
std::optional<Vertex> defended_by(const Graph& g, const VertexSet& s, Vertex v);

struct SecurityCheck {
    std::optional<DefenseCertificate> certificate;
    // Smallest undominated vertex if s is not dominating, else the smallest
    // undefended outside vertex. Absent when the certificate is present.
    std::optional<Vertex> failing_vertex;

    explicit operator bool() const { return certificate.has_value(); }
};

SecurityCheck is_secure_dominating(const Graph& g, const VertexSet& s);

// Vertices outside s that have no defender. s must be dominating.
VertexSet undefended_vertices(const Graph& g, const VertexSet& s);

// A_D: members of d with an undefended outside neighbor; B_D: the rest.
struct ABPartition {
    VertexSet a_set;
    VertexSet b_set;
};

// Throws GraphError unless d is dominating.
ABPartition ab_partition(const Graph& g, const VertexSet& d);

// Exact independence number by branch and bound. Among all maximum
// independent sets, returns the one whose ascending member sequence is
// lexicographically smallest.
VertexSet max_independent_set(const Graph& g);
int independence_number(const Graph& g);

// Exact minimum dominating set: cardinalities ascending, k-subsets in
// lexicographic order, first hit returned. Empty for the empty graph.
VertexSet min_dominating_set(const Graph& g);

// First secure dominating k-subset in lexicographic order, if any.
std::optional<DefenseCertificate> secure_dominating_set_of_size(const Graph& g, int k);

// Exact minimum secure dominating set. The search starts at the domination
// number, since no secure dominating set is smaller.
DefenseCertificate min_secure_dominating_set(const Graph& g);

}  // namespace secdom
