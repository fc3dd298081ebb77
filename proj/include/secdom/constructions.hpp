#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secdom/domination.hpp"
#include "secdom/graph.hpp"
#include "secdom/patterns.hpp"

namespace secdom {

// Non-negative rational bound value; every bound here is an integer or a
// half-integer.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    std::int64_t floor() const { return num / den; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    Rational operator+(const Rational& o) const;
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
};

// One insertion of the P5-free augmentation procedure. v, u, x are chosen
// against the set as it was before the insertion.
struct TraceStep {
    int threshold;  // i: neighbor count of v in S
    Vertex v;       // undefended vertex being repaired
    Vertex u;       // neighbor of v in S
    Vertex x;       // inserted vertex, from epn(u, S) - N(v)
    int size_s_after;
    int size_a_after;
};

struct AlgorithmTrace {
    VertexSet initial;  // the α-set the procedure started from
    int initial_a_size = 0;
    std::vector<TraceStep> steps;
};

struct ConstructionResult {
    VertexSet set;
    DefenseCertificate certificate;
    Rational bound;
    std::optional<AlgorithmTrace> trace;

    int size() const { return set.size(); }
    bool within_bound() const { return set.size() <= bound.floor(); }
};

struct ConstructOptions {
    // Skips the class-membership check. Final certification always runs.
    bool validate = true;
};

ConstructionResult sds_p5_free(const Graph& g, ConstructOptions opts = {});
ConstructionResult sds_p3p2_free(const Graph& g, ConstructOptions opts = {});
ConstructionResult sds_p3p1_free(const Graph& g, ConstructOptions opts = {});
ConstructionResult sds_k2_2k1_free(const Graph& g, ConstructOptions opts = {});
ConstructionResult sds_p5_c3_free(const Graph& g, ConstructOptions opts = {});
ConstructionResult sds_p5_paw_free(const Graph& g, ConstructOptions opts = {});
ConstructionResult sds_p5_c4_free(const Graph& g, ConstructOptions opts = {});

// Classes accepted by construct_for_class, by CLI name.
enum class ConstructClass { P5Free, P3UP2Free, P3UP1Free, K2U2K1Free, P5C3Free, P5PawFree, P5C4Free };

inline constexpr ConstructClass kConstructClasses[] = {
    ConstructClass::P5Free,    ConstructClass::P3UP2Free, ConstructClass::P3UP1Free,
    ConstructClass::K2U2K1Free, ConstructClass::P5C3Free, ConstructClass::P5PawFree,
    ConstructClass::P5C4Free};

std::string_view construct_class_name(ConstructClass c);
std::optional<ConstructClass> parse_construct_class(std::string_view name);
// Forbidden patterns that define the class.
std::vector<Pattern> class_patterns(ConstructClass c);
// True for the classes whose bound is stated for connected graphs.
bool needs_connected(ConstructClass c);
// Membership as construct_for_class validates it (componentwise for the
// connected-only classes).
bool in_class(const Graph& g, ConstructClass c);

// Validates membership, runs the class's construction (per component for the
// connected-only classes) and unions the results. The bound is the sum of the
// per-component bounds.
ConstructionResult construct_for_class(const Graph& g, ConstructClass c, ConstructOptions opts = {});
// Throws ClassValidationError for an unknown class name.
ConstructionResult construct_for_class(const Graph& g, std::string_view class_name,
                                       ConstructOptions opts = {});

// Vertices of an induced C5 and the partition of every other vertex by the
// pair of cycle vertices it sees, for connected (P5,C3)-free graphs.
struct CycleExpansionPartition {
    std::array<Vertex, 5> cycle;
    std::array<VertexSet, 5> parts;  // parts[i] contains cycle[i]
};

// Throws InvariantViolation if some vertex off the cycle does not see exactly
// two non-consecutive cycle vertices.
CycleExpansionPartition cycle_expansion_partition(const Graph& g, const std::array<Vertex, 5>& cycle);

}  // namespace secdom
