#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secdom/constructions.hpp"
#include "secdom/graph.hpp"

namespace secdom {

// One row of the bound ledger.
struct BenchRow {
    std::string class_name;
    std::string instance;
    int n = 0;
    int alpha = 0;
    std::optional<int> gamma_s_exact;
    int constructed_size = 0;
    Rational bound;
    bool within_bound = false;
    std::int64_t runtime_ms = 0;
};

struct NamedGraph {
    std::string id;
    Graph graph;
};

// Stars K_{1,n} for n = 1..10, k·C5 for k = 1..3, complete buoys, cycle
// expansions and a buoy with a universal apex.
std::vector<NamedGraph> bench_instances();

// One row per (instance, class) with the instance in the class, sorted by
// instance id then class name. Exact γs is computed up to `exact_limit`
// vertices.
std::vector<BenchRow> run_bench(int exact_limit = 20);

// Header plus one line per row, fixed column order, '\n' line endings.
std::string bench_csv(const std::vector<BenchRow>& rows);

struct VerifyOptions {
    ConstructClass cls = ConstructClass::P5Free;
    int nmax = 6;        // exhaustive over all labeled graphs with 1..nmax vertices
    std::uint64_t seed = 1;
    int samples = 0;     // additional seeded random in-class graphs
    int sample_nmax = 12;
    int attempt_budget = 10000;
};

struct VerifyReport {
    long exhaustive_checked = 0;
    long sampled_checked = 0;
    long sampled_absent = 0;  // budget exhausted
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Runs the class's construction on every in-class graph (connected ones for
// the connected-only classes) and records certificate, bound and
// exact-optimum violations. Deterministic for a given seed.
VerifyReport verify_bounds(const VerifyOptions& opts);

// Checks one instance: certificate re-verified, size within the floored
// bound, and size >= exact γs when n <= exact_limit. Returns a failure
// description or nothing.
std::optional<std::string> check_instance(const Graph& g, ConstructClass c, int exact_limit = 12);

}  // namespace secdom
