#include "secdom/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "secdom/errors.hpp"
#include "secdom/formats.hpp"
#include "secdom/generators.hpp"

namespace secdom {

namespace {

std::string pad2(int v) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02d", v);
    return buf;
}

std::string sizes_id(const std::vector<int>& sizes) {
    std::string out;
    for (int s : sizes) out += "_" + std::to_string(s);
    return out;
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string describe(const Graph& g) { return to_graph6(g); }

}  // namespace

std::vector<NamedGraph> bench_instances() {
    std::vector<NamedGraph> out;
    for (int n = 1; n <= 10; ++n)
        out.push_back({"star_k1_" + pad2(n), gen_basic(BasicFamily::Star, n + 1)});
    for (int k = 1; k <= 3; ++k) out.push_back({"c5x" + std::to_string(k), gen_disjoint_c5(k)});
    const std::vector<std::vector<int>> buoys = {
        {1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {2, 2, 1, 1, 1}, {2, 2, 2, 2, 2}, {3, 1, 2, 1, 3}};
    for (const auto& s : buoys) out.push_back({"buoy" + sizes_id(s), gen_complete_buoy(s)});
    const std::vector<std::vector<int>> expansions = {
        {2, 1, 1, 1, 1}, {3, 1, 1, 1, 1}, {2, 2, 2, 2, 2}, {3, 3, 3, 3, 3}};
    for (const auto& s : expansions) out.push_back({"expansion" + sizes_id(s), gen_cycle_expansion(s)});

    // Buoy (2,1,1,1,1) plus a vertex adjacent to all of it.
    Graph buoy = gen_complete_buoy(std::vector<int>{2, 1, 1, 1, 1});
    auto edges = buoy.edges();
    for (int v = 0; v < buoy.order(); ++v) edges.emplace_back(v, buoy.order());
    out.push_back({"buoy_apex_2_1_1_1_1", Graph(buoy.order() + 1, edges)});
    return out;
}

std::vector<BenchRow> run_bench(int exact_limit) {
    std::vector<BenchRow> rows;
    for (const auto& inst : bench_instances()) {
        const int alpha = independence_number(inst.graph);
        std::optional<int> exact;
        if (inst.graph.order() <= exact_limit) exact = min_secure_dominating_set(inst.graph).set.size();
        for (ConstructClass c : kConstructClasses) {
            if (!in_class(inst.graph, c)) continue;
            const auto start = std::chrono::steady_clock::now();
            auto result = construct_for_class(inst.graph, c, ConstructOptions{false});
            const auto elapsed = std::chrono::steady_clock::now() - start;
            BenchRow row;
            row.class_name = std::string(construct_class_name(c));
            row.instance = inst.id;
            row.n = inst.graph.order();
            row.alpha = alpha;
            row.gamma_s_exact = exact;
            row.constructed_size = result.size();
            row.bound = result.bound;
            row.within_bound = result.within_bound();
            row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.instance, a.class_name) < std::tie(b.instance, b.class_name);
    });
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "class,instance,n,alpha,gamma_s_exact,constructed_size,bound,within_bound,runtime_ms\n";
    for (const auto& r : rows) {
        char bound[32];
        std::snprintf(bound, sizeof bound, "%.1f", r.bound.value());
        os << r.class_name << ',' << r.instance << ',' << r.n << ',' << r.alpha << ','
           << (r.gamma_s_exact ? std::to_string(*r.gamma_s_exact) : std::string()) << ','
           << r.constructed_size << ',' << bound << ',' << (r.within_bound ? "true" : "false") << ','
           << r.runtime_ms << '\n';
    }
    return os.str();
}

std::optional<std::string> check_instance(const Graph& g, ConstructClass c, int exact_limit) {
    const std::string where = std::string(construct_class_name(c)) + " on " + describe(g) + ": ";
    try {
        auto r = construct_for_class(g, c, ConstructOptions{false});
        if (!verify_certificate(g, r.certificate) || r.certificate.set != r.set)
            return where + "certificate does not verify";
        if (!r.within_bound())
            return where + "size " + std::to_string(r.size()) + " exceeds bound " +
                   std::to_string(r.bound.value());
        if (g.order() <= exact_limit) {
            const int exact = min_secure_dominating_set(g).set.size();
            if (r.size() < exact)
                return where + "size " + std::to_string(r.size()) + " below exact optimum " +
                       std::to_string(exact);
        }
    } catch (const std::exception& e) {
        return where + e.what();
    }
    return std::nullopt;
}

VerifyReport verify_bounds(const VerifyOptions& opts) {
    if (opts.nmax > kMaxEnumerationOrder)
        throw GraphError("exhaustive verification is limited to n <= " + std::to_string(kMaxEnumerationOrder));
    VerifyReport report;
    const bool connected = needs_connected(opts.cls);
    for (int n = 1; n <= opts.nmax; ++n) {
        for (const Graph& g : enumerate_labeled(n)) {
            if (connected && !is_connected(g)) continue;
            if (!in_class(g, opts.cls)) continue;
            ++report.exhaustive_checked;
            if (auto f = check_instance(g, opts.cls)) report.failures.push_back(*f);
        }
    }
    for (int s = 0; s < opts.samples; ++s) {
        const std::uint64_t seed = mix(opts.seed * 0x100000001b3ULL + static_cast<std::uint64_t>(s));
        RandomClassSpec spec;
        spec.n = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(std::max(1, opts.sample_nmax)));
        spec.p = 0.1 + 0.8 * static_cast<double>((seed >> 16) % 1000) / 1000.0;
        spec.forbidden = class_patterns(opts.cls);
        spec.connected = connected;
        spec.seed = seed;
        spec.attempt_budget = opts.attempt_budget;
        auto g = gen_random_class(spec);
        if (!g) {
            ++report.sampled_absent;
            continue;
        }
        ++report.sampled_checked;
        if (auto f = check_instance(*g, opts.cls)) report.failures.push_back(*f);
    }
    return report;
}

}  // namespace secdom
