#include "secdom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "secdom/constructions.hpp"
#include "secdom/domination.hpp"
#include "secdom/errors.hpp"
#include "secdom/formats.hpp"
#include "secdom/generators.hpp"
#include "secdom/harness.hpp"
#include "secdom/patterns.hpp"

namespace secdom {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    const std::string text = read_input(path);
    GraphFormat f = detect_format(text);
    if (!format.empty() && format != "auto") {
        auto named = parse_format_name(format);
        if (!named) throw UsageError("unknown format '" + format + "'");
        f = *named;
    }
    return parse_graph({f, text});
}

std::string members(const VertexSet& s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

std::string decimal(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", r.value());
    return buf;
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw UsageError("bad size '" + tok + "'");
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw UsageError("bad size '" + tok + "'");
        }
    }
    return out;
}

ConstructClass require_class(const std::string& name) {
    auto c = parse_construct_class(name);
    if (!c) {
        std::string known;
        for (auto k : kConstructClasses) known += " " + std::string(construct_class_name(k));
        throw UsageError("unknown class '" + name + "' (known:" + known + ")");
    }
    return *c;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Secure domination constructions, exact solvers and bound checks", "secdom"};
    app.require_subcommand(1);

    std::string file, format = "auto";

    auto* classify_cmd = app.add_subcommand("classify", "Report membership in every tracked graph class");
    classify_cmd->add_option("file", file, "Graph file (graph6 or edge-list, '-' for stdin)")->required();
    classify_cmd->add_option("--format", format, "graph6 | edge-list | auto");

    std::string what;
    auto* solve_cmd = app.add_subcommand("solve", "Exact alpha, gamma or gamma_s with a witness");
    solve_cmd->add_option("file", file)->required();
    solve_cmd->add_option("--what", what, "alpha | gamma | gamma-s")->required()
        ->check(CLI::IsMember({"alpha", "gamma", "gamma-s"}));
    solve_cmd->add_option("--format", format);

    std::string cls;
    bool skip_validation = false, show_trace = false;
    auto* construct_cmd = app.add_subcommand("construct", "Run the constructive algorithm for a class");
    construct_cmd->add_option("file", file)->required();
    construct_cmd->add_option("--class", cls, "Graph class name")->required();
    construct_cmd->add_flag("--skip-validation", skip_validation, "Skip the class-membership check");
    construct_cmd->add_flag("--trace", show_trace, "Print the augmentation trace (p5-free)");
    construct_cmd->add_option("--format", format);

    VerifyOptions vopts;
    std::string verify_cls;
    auto* verify_cmd = app.add_subcommand("verify-bounds", "Exhaustive plus sampled bound verification");
    verify_cmd->add_option("--class", verify_cls)->required();
    verify_cmd->add_option("--nmax", vopts.nmax, "Exhaustive up to this order (<= 7)")->required()
        ->check(CLI::Range(0, kMaxEnumerationOrder));
    verify_cmd->add_option("--seed", vopts.seed);
    verify_cmd->add_option("--samples", vopts.samples)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--sample-nmax", vopts.sample_nmax)->check(CLI::Range(1, 40));

    std::string bench_out;
    int exact_limit = 20;
    auto* bench_cmd = app.add_subcommand("bench", "Bound ledger over the built-in tight families (CSV)");
    bench_cmd->add_option("--out", bench_out, "CSV path (stdout when omitted)");
    bench_cmd->add_option("--exact-limit", exact_limit, "Largest order for the exact gamma_s column");

    std::string family, sizes_text, patterns_text, out_format = "graph6";
    int gen_n = 0, gen_k = 1;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    bool gen_connected = false;
    auto* generate_cmd = app.add_subcommand("generate", "Emit a generated graph");
    generate_cmd->add_option("--family", family,
                             "path | cycle | star | complete | disjoint-c5 | multipartite | buoy | expansion | random")
        ->required();
    generate_cmd->add_option("--n", gen_n);
    generate_cmd->add_option("--k", gen_k);
    generate_cmd->add_option("--sizes", sizes_text, "Comma-separated part sizes");
    generate_cmd->add_option("--p", gen_p)->check(CLI::Range(0.0, 1.0));
    generate_cmd->add_option("--patterns", patterns_text, "Forbidden patterns for random, e.g. P5,C4");
    generate_cmd->add_flag("--connected", gen_connected);
    generate_cmd->add_option("--seed", gen_seed);
    generate_cmd->add_option("--format", out_format)->check(CLI::IsMember({"graph6", "edge-list"}));

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) {
            const Graph g = load_graph(file, format);
            const ClassReport report = classify(g);
            for (GraphClass c : kAllClasses)
                out << class_name(c) << ": " << (report[c] ? "yes" : "no") << '\n';
            return kExitOk;
        }
        if (solve_cmd->parsed()) {
            const Graph g = load_graph(file, format);
            VertexSet witness;
            if (what == "alpha") witness = max_independent_set(g);
            else if (what == "gamma") witness = min_dominating_set(g);
            else witness = min_secure_dominating_set(g).set;
            out << witness.size() << '\n' << "witness: " << members(witness) << '\n';
            return kExitOk;
        }
        if (construct_cmd->parsed()) {
            const ConstructClass c = require_class(cls);
            const Graph g = load_graph(file, format);
            const auto r = construct_for_class(g, c, ConstructOptions{!skip_validation});
            const bool certified = verify_certificate(g, r.certificate);
            out << "class: " << construct_class_name(c) << '\n'
                << "set: " << members(r.set) << '\n'
                << "size: " << r.size() << '\n'
                << "bound: " << decimal(r.bound) << '\n'
                << "certified: " << (certified ? "yes" : "no") << '\n';
            if (show_trace) {
                if (r.trace) {
                    out << "trace: " << r.trace->steps.size() << " step(s), start " << r.trace->initial
                        << " |A|=" << r.trace->initial_a_size << '\n';
                    for (const auto& s : r.trace->steps)
                        out << "  i=" << s.threshold << " v=" << s.v << " u=" << s.u << " x=" << s.x
                            << " |S|=" << s.size_s_after << " |A|=" << s.size_a_after << '\n';
                } else {
                    out << "trace: not available for this class\n";
                }
            }
            return certified && r.within_bound() ? kExitOk : kExitFailure;
        }
        if (verify_cmd->parsed()) {
            vopts.cls = require_class(verify_cls);
            vopts.attempt_budget = attempt_budget_from_env();
            const auto report = verify_bounds(vopts);
            for (const auto& f : report.failures) out << "FAIL " << f << '\n';
            out << "verify-bounds " << construct_class_name(vopts.cls) << ": exhaustive "
                << report.exhaustive_checked << ", sampled " << report.sampled_checked
                << " (budget exhausted " << report.sampled_absent << "), failures "
                << report.failures.size() << '\n';
            return report.ok() ? kExitOk : kExitFailure;
        }
        if (bench_cmd->parsed()) {
            const auto rows = run_bench(exact_limit);
            const std::string csv = bench_csv(rows);
            if (bench_out.empty()) {
                out << csv;
            } else {
                std::ofstream f(bench_out, std::ios::binary);
                if (!f) throw UsageError("cannot write " + bench_out);
                f << csv;
            }
            const bool ok = std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) {
                return r.within_bound && (!r.gamma_s_exact || r.constructed_size >= *r.gamma_s_exact);
            });
            return ok ? kExitOk : kExitFailure;
        }
        if (generate_cmd->parsed()) {
            Graph g;
            if (auto basic = parse_basic_family(family)) {
                g = gen_basic(*basic, gen_n);
            } else if (family == "disjoint-c5") {
                g = gen_disjoint_c5(gen_k);
            } else if (family == "multipartite") {
                g = gen_complete_multipartite(parse_sizes(sizes_text));
            } else if (family == "buoy") {
                g = gen_complete_buoy(parse_sizes(sizes_text));
            } else if (family == "expansion") {
                g = gen_cycle_expansion(parse_sizes(sizes_text));
            } else if (family == "random") {
                RandomClassSpec spec;
                spec.n = gen_n;
                spec.p = gen_p;
                spec.connected = gen_connected;
                spec.seed = gen_seed;
                spec.attempt_budget = attempt_budget_from_env();
                std::stringstream ss(patterns_text);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    if (tok.empty()) continue;
                    auto p = parse_pattern(tok);
                    if (!p) throw UsageError("unknown pattern '" + tok + "'");
                    spec.forbidden.push_back(*p);
                }
                auto drawn = gen_random_class(spec);
                if (!drawn) {
                    err << "error: attempt budget exhausted without an in-class sample\n";
                    return kExitFailure;
                }
                g = *drawn;
            } else {
                throw UsageError("unknown family '" + family + "'");
            }
            const auto doc = emit_graph(g, *parse_format_name(out_format));
            out << doc.payload;
            if (doc.format == GraphFormat::Graph6) out << '\n';
            return kExitOk;
        }
    } catch (const InvariantViolation& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace secdom
