// Command-line front end: Eulerian checks, minimal Eulerian trails,
// minimal de Bruijn sequences, trail enumeration/counting, benchmarks.
// Exit codes: 0 success, 1 domain failure (non-Eulerian), 2 usage/parse.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mintrail/debruijn.hpp"
#include "mintrail/engine.hpp"
#include "mintrail/graph.hpp"
#include "mintrail/io.hpp"
#include "mintrail/oracle.hpp"

namespace {

using nlohmann::json;
using namespace mintrail;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

json report_to_json(const LabeledDigraph& g, const EulerianReport& rep) {
    json offending = json::array();
    for (auto [v, in, out] : rep.offending)
        offending.push_back({{"vertex", g.vertex_name(v)}, {"in", in}, {"out", out}});
    return {{"balanced", rep.balanced},
            {"strongly_connected", rep.strongly_connected_support},
            {"eulerian", rep.is_eulerian()},
            {"offending", offending}};
}

void print_report(const LabeledDigraph& g, const EulerianReport& rep) {
    std::cout << "vertices: " << g.vertex_count() << '\n'
              << "arcs: " << g.arc_count() << '\n'
              << "balanced: " << (rep.balanced ? "true" : "false") << '\n'
              << "strongly_connected: "
              << (rep.strongly_connected_support ? "true" : "false") << '\n'
              << "eulerian: " << (rep.is_eulerian() ? "true" : "false") << '\n';
    for (auto [v, in, out] : rep.offending)
        std::cout << "unbalanced: " << g.vertex_name(v) << " in=" << in
                  << " out=" << out << '\n';
}

int cmd_check(const std::string& path, bool as_json) {
    LabeledDigraph g = load_graph(path);
    EulerianReport rep = check_eulerian(g);
    if (as_json)
        std::cout << report_to_json(g, rep).dump() << '\n';
    else
        print_report(g, rep);
    return rep.is_eulerian() ? kExitOk : kExitDomain;
}

std::string trail_to_text(const LabeledDigraph& g, const Trail& t) {
    std::string out = g.vertex_name(t.start_vertex());
    for (const TrailStep& s : t) {
        out += " -";
        out += s.label;
        out += "-> ";
        out += g.vertex_name(g.arc(s.arc).head);
    }
    return out;
}

int cmd_euler(const std::string& path, const std::string& start,
              const std::string& emit, bool as_json, bool diagnostics) {
    LabeledDigraph g = load_graph(path);
    auto r = g.find_vertex(start);
    if (!r) {
        std::cerr << "unknown vertex '" << start << "'\n";
        return kExitUsage;
    }
    EngineOptions opts;
    opts.check_singleton_cut = diagnostics;
    Trail trail;
    TrailStats stats;
    try {
        std::tie(trail, stats) = minimal_eulerian_trail(g, *r, opts);
    } catch (const NotEulerian& e) {
        if (as_json)
            std::cout << json{{"error", "not eulerian"},
                              {"report", report_to_json(g, e.report)}}
                             .dump()
                      << '\n';
        else
            print_report(g, e.report);
        return kExitDomain;
    }
    bool bound_ok = stats.arc_visits <= 2 * stats.arcs_total;
    if (as_json) {
        json out{{"start", start},
                 {"label", trail.label()},
                 {"arcs", stats.arcs_total},
                 {"arc_visits", stats.arc_visits},
                 {"splices", stats.splices},
                 {"visit_bound_ok", bound_ok}};
        if (emit == "trail") out["trail"] = trail_to_text(g, trail);
        std::cout << out.dump() << '\n';
    } else if (emit == "label") {
        std::cout << trail.label() << '\n';
    } else if (emit == "trail") {
        std::cout << trail_to_text(g, trail) << '\n';
    } else {  // stats
        std::cout << "arcs: " << stats.arcs_total << '\n'
                  << "arc_visits: " << stats.arc_visits << '\n'
                  << "splices: " << stats.splices << '\n'
                  << "arc_visits <= 2*|A|: " << (bound_ok ? "ok" : "VIOLATED") << '\n';
    }
    return bound_ok ? kExitOk : kExitDomain;
}

int cmd_debruijn(const std::string& path, const std::string& emit, bool as_json) {
    Dictionary d = load_dictionary(path);
    LabeledDigraph g = build_debruijn_graph(d);
    std::string sequence;
    if (emit != "graph") {
        try {
            sequence = minimal_debruijn_sequence(d);
        } catch (const NoDeBruijnSequence& e) {
            if (as_json)
                std::cout << json{{"error", "no de Bruijn sequence"},
                                  {"report", report_to_json(g, e.report)}}
                                 .dump()
                          << '\n';
            else {
                std::cout << "not eulerian:\n";
                print_report(g, e.report);
            }
            return kExitDomain;
        }
    }
    if (as_json) {
        json out;
        if (emit != "graph") out["sequence"] = sequence;
        if (emit != "sequence") out["graph"] = graph_to_text(g);
        std::cout << out.dump() << '\n';
    } else {
        if (emit != "graph") std::cout << sequence << '\n';
        if (emit != "sequence") std::cout << graph_to_text(g);
    }
    return kExitOk;
}

int cmd_enumerate(const std::string& path, const std::string& start,
                  std::uint64_t limit, bool as_json) {
    LabeledDigraph g = load_graph(path);
    auto r = g.find_vertex(start);
    if (!r) {
        std::cerr << "unknown vertex '" << start << "'\n";
        return kExitUsage;
    }
    auto e = oracle::enumerate_eulerian_trails(g, *r, limit);
    if (as_json) {
        std::cout << json{{"count", e.count}, {"labels", e.labels}}.dump() << '\n';
    } else {
        std::cout << "count: " << e.count << '\n';
        for (const auto& l : e.labels) std::cout << l << '\n';
    }
    return kExitOk;
}

int cmd_count(const std::string& path, const std::string& start, bool as_json) {
    LabeledDigraph g = load_graph(path);
    auto r = g.find_vertex(start);
    if (!r) {
        std::cerr << "unknown vertex '" << start << "'\n";
        return kExitUsage;
    }
    try {
        auto c = oracle::best_count(g, *r);
        if (as_json)
            std::cout << json{{"count", c.str()}}.dump() << '\n';
        else
            std::cout << c << '\n';
    } catch (const NotEulerian& e) {
        if (as_json)
            std::cout << json{{"error", "not eulerian"},
                              {"report", report_to_json(g, e.report)}}
                             .dump()
                      << '\n';
        else
            print_report(g, e.report);
        return kExitDomain;
    }
    return kExitOk;
}

int cmd_bench(int vertices, int cycles, int alphabet, std::uint64_t seed, int repeats) {
    std::cout << "row\tarcs\tms\tvisits_ratio\n";
    int failures = 0;
    for (int row = 0; row < repeats; ++row) {
        oracle::GeneratorConfig cfg;
        cfg.vertex_count = vertices;
        cfg.cycle_count = cycles << row;  // double the size each row
        cfg.alphabet_size = alphabet;
        cfg.seed = seed + static_cast<std::uint64_t>(row);
        try {
            LabeledDigraph g = oracle::random_eulerian_graph(cfg);
            VertexId r = 0;
            while (g.out_degree(r) == 0) ++r;
            auto t0 = std::chrono::steady_clock::now();
            auto [trail, stats] = minimal_eulerian_trail(g, r);
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            double ratio =
                static_cast<double>(stats.arc_visits) / static_cast<double>(stats.arcs_total);
            std::cout << row << '\t' << stats.arcs_total << '\t' << ms << '\t' << ratio
                      << '\n';
            if (ratio > 2.0) ++failures;
        } catch (const oracle::GenerationFailed& e) {
            std::cout << row << "\tgeneration failed: " << e.what() << '\n';
            ++failures;
        }
    }
    return failures == 0 ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal Eulerian trails and de Bruijn sequences on labeled digraphs"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string graph_file, dict_file, start, emit = "label";
    bool diagnostics = false;
    std::uint64_t limit = 10'000'000, seed = 1;
    int vertices = 64, cycles = 4, alphabet = 16, repeats = 5;

    auto* check = app.add_subcommand("check", "Eulerian precondition report");
    check->add_option("graph", graph_file, "graph file")->required();

    auto* euler = app.add_subcommand("euler", "minimal Eulerian trail from a vertex");
    euler->add_option("graph", graph_file, "graph file")->required();
    euler->add_option("--start", start, "start vertex name")->required();
    euler->add_option("--emit", emit, "label|trail|stats")
        ->check(CLI::IsMember({"label", "trail", "stats"}));
    euler->add_flag("--diagnostics", diagnostics, "enable per-splice cut assertions");

    auto* debruijn = app.add_subcommand("debruijn", "minimal de Bruijn sequence");
    debruijn->add_option("dictionary", dict_file, "dictionary file")->required();
    std::string db_emit = "sequence";
    debruijn->add_option("--emit", db_emit, "sequence|graph|both")
        ->check(CLI::IsMember({"sequence", "graph", "both"}));

    auto* enumerate = app.add_subcommand("enumerate", "brute-force trail enumeration");
    enumerate->add_option("graph", graph_file, "graph file")->required();
    enumerate->add_option("--start", start, "start vertex name")->required();
    enumerate->add_option("--limit", limit, "search state budget");

    auto* count = app.add_subcommand("count", "BEST-theorem trail count");
    count->add_option("graph", graph_file, "graph file")->required();
    count->add_option("--start", start, "start vertex name")->required();

    auto* bench = app.add_subcommand("bench", "timing on generated instances");
    bench->add_option("--vertices", vertices, "vertex count");
    bench->add_option("--cycles", cycles, "cycles in the smallest row");
    bench->add_option("--alphabet", alphabet, "alphabet size");
    bench->add_option("--seed", seed, "generator seed");
    bench->add_option("--repeats", repeats, "rows (size doubles per row)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(graph_file, as_json);
        if (euler->parsed()) return cmd_euler(graph_file, start, emit, as_json, diagnostics);
        if (debruijn->parsed()) return cmd_debruijn(dict_file, db_emit, as_json);
        if (enumerate->parsed()) return cmd_enumerate(graph_file, start, limit, as_json);
        if (count->parsed()) return cmd_count(graph_file, start, as_json);
        if (bench->parsed()) return cmd_bench(vertices, cycles, alphabet, seed, repeats);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownVertex& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
