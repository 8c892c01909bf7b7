#include "bbt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bbt/dimacs.hpp"
#include "bbt/generate.hpp"
#include "bbt/oracle.hpp"
#include "bbt/solver.hpp"

namespace bbt::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

Graph load_graph(const std::string& path, std::istream& in, std::ostream& err) {
    std::vector<std::string> warnings;
    Graph g;
    if (path == "-") {
        g = parse_dimacs(in, &warnings);
    } else {
        std::ifstream file(path);
        if (!file) fail(errc::invalid_parameter, "cannot open '" + path + "'");
        g = parse_dimacs(file, &warnings);
    }
    for (const auto& w : warnings) err << "warning: " << path << ": " << w << "\n";
    return g;
}

EdgeSet load_edge_list(const std::string& path) {
    std::ifstream file(path);
    if (!file) fail(errc::invalid_parameter, "cannot open '" + path + "'");
    EdgeSet edges;
    std::string line;
    int line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        long long u = 0, v = 0;
        if (!(fields >> u)) continue; // blank line
        std::string rest;
        if (!(fields >> v) || (fields >> rest))
            fail(errc::syntax_error, path + ": expected 'u v' at line " + std::to_string(line_no));
        edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
    }
    return edges;
}

ordered_json edges_to_json(const EdgeSet& edges) {
    ordered_json out = ordered_json::array();
    for (const auto& [u, v] : edges) out.push_back({u, v});
    return out;
}

ordered_json solution_to_json(const SolveResult& r, int q, SolveMode mode, bool with_trace) {
    ordered_json out;
    out["n"] = r.coloring.n();
    out["q"] = q;
    out["k_achieved"] = r.k_achieved;
    out["k_target"] = r.k_target;
    out["colors"] = r.coloring.colors;
    out["tree"] = edges_to_json(r.tree);
    out["iterations"] = r.iterations;
    out["mode"] = mode == SolveMode::exact ? "exact" : "heuristic";
    if (with_trace) {
        ordered_json trace = ordered_json::array();
        for (const auto& rec : r.trace)
            trace.push_back({rec.case_tag, rec.edge.first, rec.edge.second, rec.j});
        out["trace"] = trace;
    }
    return out;
}

struct Options {
    int q = 1;
    std::string mode = "exact";
    bool trace = false;
    std::string graph_path;
    std::string solution_path;
    std::string backbone_path;
    long long cap = 1'000'000;
    std::string family;
    GenParams gen;
    int n_max = 5;
    std::string q_list = "1,2";
};

int cmd_solve(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(opt.graph_path, in, err);
    const SolveMode mode = opt.mode == "exact" ? SolveMode::exact : SolveMode::heuristic;
    const SolveResult r = solve(g, opt.q, mode);
    out << solution_to_json(r, opt.q, mode, opt.trace).dump() << "\n";
    return 0;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(opt.graph_path, in, err);
    std::ifstream file(opt.solution_path);
    if (!file) fail(errc::invalid_parameter, "cannot open '" + opt.solution_path + "'");
    nlohmann::json solution;
    try {
        solution = nlohmann::json::parse(file);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::syntax_error, opt.solution_path + ": " + e.what());
    }
    if (!solution.contains("colors") || !solution.contains("tree"))
        fail(errc::syntax_error, opt.solution_path + ": missing 'colors' or 'tree'");
    if (solution.contains("q") && solution["q"].get<int>() != opt.q)
        err << "warning: solution file says q=" << solution["q"].get<int>() << ", checking with q="
            << opt.q << "\n";

    Coloring c;
    c.colors = solution["colors"].get<std::vector<int>>();
    c.k = c.max_color_used();
    EdgeSet tree;
    for (const auto& pair : solution["tree"]) {
        if (!pair.is_array() || pair.size() != 2)
            fail(errc::syntax_error, opt.solution_path + ": tree entries must be [u,v]");
        tree.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }

    const VerifyReport report = verify_backbone_coloring(g, tree, c, opt.q);
    ordered_json result;
    result["proper"] = report.proper;
    result["spanning_tree"] = report.spanning_tree;
    result["backbone_ok"] = report.backbone_ok;
    result["k_used"] = report.k_used;
    out << result.dump() << "\n";
    return report.all_ok() ? 0 : 1;
}

int cmd_oracle_bbc(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(opt.graph_path, in, err);
    const BackboneInstance inst{g, load_edge_list(opt.backbone_path)};
    const BbcResult r = bbc_exact(inst, opt.q);
    ordered_json result;
    result["value"] = r.value;
    result["witness_colors"] = r.witness.colors;
    result["nodes"] = r.nodes;
    out << result.dump() << "\n";
    return 0;
}

int cmd_oracle_best_tree(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(opt.graph_path, in, err);
    const BestTreeResult r = best_tree_exact(g, opt.q, opt.cap);
    ordered_json result;
    result["value"] = r.value;
    result["witness_colors"] = r.witness.colors;
    result["tree"] = edges_to_json(r.tree);
    result["nodes"] = r.nodes;
    out << result.dump() << "\n";
    return 0;
}

int cmd_oracle_chi(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(opt.graph_path, in, err);
    const ChromaticResult r = exact_chromatic(g);
    ordered_json result;
    result["value"] = r.chi;
    result["witness_colors"] = r.witness.colors;
    result["nodes"] = r.nodes;
    out << result.dump() << "\n";
    return 0;
}

int cmd_gen(const Options& opt, std::ostream& out) {
    write_dimacs(generate(opt.family, opt.gen), out);
    return 0;
}

std::vector<int> parse_q_list(const std::string& text) {
    std::vector<int> qs;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            qs.push_back(std::stoi(item));
        } catch (const std::exception&) {
            fail(errc::invalid_parameter, "bad q list entry '" + item + "'");
        }
        if (qs.back() < 1) fail(errc::invalid_parameter, "q >= 1 required");
    }
    if (qs.empty()) fail(errc::invalid_parameter, "empty q list");
    return qs;
}

int cmd_enumerate_check(const Options& opt, std::ostream& out) {
    if (opt.n_max > 6) fail(errc::too_large, "n-max <= 6 required");
    if (opt.n_max < 2) fail(errc::invalid_parameter, "n-max >= 2 required");
    const std::vector<int> qs = parse_q_list(opt.q_list);

    long long graphs = 0, checks = 0, oracle_checks = 0;
    ordered_json failures = ordered_json::array();
    auto record_failure = [&failures](int n, const Graph& g, int q, const std::string& reason) {
        ordered_json f;
        f["n"] = n;
        f["q"] = q;
        f["edges"] = edges_to_json(g.edges());
        f["reason"] = reason;
        failures.push_back(f);
    };

    for (int n = 2; n <= opt.n_max; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            ++graphs;
            for (int q : qs) {
                ++checks;
                SolveResult r;
                try {
                    r = solve(g, q, SolveMode::exact);
                } catch (const Error& e) {
                    record_failure(n, g, q, e.what());
                    continue;
                }
                if (!verify_backbone_coloring(g, r.tree, r.coloring, q).all_ok()) {
                    record_failure(n, g, q, "solution failed verification");
                    continue;
                }
                if (r.k_achieved != r.k_target) {
                    record_failure(n, g, q,
                                   "k_achieved " + std::to_string(r.k_achieved) + " != target " +
                                       std::to_string(r.k_target));
                    continue;
                }
                if (n <= 5) {
                    ++oracle_checks;
                    const BestTreeResult oracle = best_tree_exact(g, q);
                    if (oracle.value != r.k_achieved)
                        record_failure(n, g, q,
                                       "oracle best tree " + std::to_string(oracle.value) +
                                           " != solver " + std::to_string(r.k_achieved));
                }
            }
        });
    }

    ordered_json report;
    report["n_max"] = opt.n_max;
    report["q"] = qs;
    report["graphs_checked"] = graphs;
    report["checks"] = checks;
    report["oracle_cross_checks"] = oracle_checks;
    report["failures"] = failures;
    out << report.dump() << "\n";
    return failures.empty() ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spanning-tree backbone coloring toolkit", "bbt"};
    app.require_subcommand(1);
    Options opt;

    auto* solve_cmd = app.add_subcommand("solve", "Color a graph and extract a tree backbone");
    solve_cmd->add_option("--q", opt.q, "separation")->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--mode", opt.mode, "exact|heuristic")
        ->check(CLI::IsMember({"exact", "heuristic"}));
    solve_cmd->add_flag("--trace", opt.trace, "include the swap trace in the output");
    solve_cmd->add_option("file", opt.graph_path, "DIMACS .col file, or - for stdin")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check a solution JSON against a graph");
    verify_cmd->add_option("--q", opt.q, "separation")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--solution", opt.solution_path, "solution JSON")->required();
    verify_cmd->add_option("file", opt.graph_path, "DIMACS .col file, or - for stdin")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
    oracle_cmd->require_subcommand(1);
    auto* bbc_cmd = oracle_cmd->add_subcommand("bbc", "Exact backbone chromatic number of (G,H)");
    bbc_cmd->add_option("--q", opt.q, "separation")->required()->check(CLI::PositiveNumber);
    bbc_cmd->add_option("--backbone", opt.backbone_path, "edge list, one 0-based 'u v' per line")
        ->required();
    bbc_cmd->add_option("file", opt.graph_path, "DIMACS .col file, or - for stdin")->required();
    auto* best_cmd = oracle_cmd->add_subcommand("best-tree", "Minimum BBC over all spanning trees");
    best_cmd->add_option("--q", opt.q, "separation")->required()->check(CLI::PositiveNumber);
    best_cmd->add_option("--cap", opt.cap, "spanning tree cap")->check(CLI::PositiveNumber);
    best_cmd->add_option("file", opt.graph_path, "DIMACS .col file, or - for stdin")->required();
    auto* chi_cmd = oracle_cmd->add_subcommand("chi", "Exact chromatic number");
    chi_cmd->add_option("file", opt.graph_path, "DIMACS .col file, or - for stdin")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Emit a named graph as DIMACS");
    gen_cmd
        ->add_option("--family", opt.family,
                     "complete|cycle|wheel|complete_bipartite|petersen|gnp")
        ->required();
    gen_cmd->add_option("--n", opt.gen.n, "vertex count (rim length for wheel)");
    gen_cmd->add_option("--a", opt.gen.a, "left part size");
    gen_cmd->add_option("--b", opt.gen.b, "right part size");
    gen_cmd->add_option("--p", opt.gen.p, "edge probability");
    gen_cmd->add_option("--seed", opt.gen.seed, "64-bit seed");

    auto* enum_cmd = app.add_subcommand("enumerate-check",
                                        "Exhaustively confirm solve against the optimum");
    enum_cmd->add_option("--n-max", opt.n_max, "largest vertex count, <= 6")->required();
    enum_cmd->add_option("--q", opt.q_list, "comma-separated separations")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(opt, in, out, err);
        if (verify_cmd->parsed()) return cmd_verify(opt, in, out, err);
        if (bbc_cmd->parsed()) return cmd_oracle_bbc(opt, in, out, err);
        if (best_cmd->parsed()) return cmd_oracle_best_tree(opt, in, out, err);
        if (chi_cmd->parsed()) return cmd_oracle_chi(opt, in, out, err);
        if (gen_cmd->parsed()) return cmd_gen(opt, out);
        if (enum_cmd->parsed()) return cmd_enumerate_check(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case errc::too_large:
            case errc::cap_exceeded:
            case errc::budget_exceeded:
                return 3;
            default:
                return 2;
        }
    }
    return 2;
}

} // namespace bbt::cli
