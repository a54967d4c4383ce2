// maxmatch: analyze, construct and certify graphs whose edge set
// partitions into maximum matchings.
//
// Exit codes: 0 success/pass, 1 usage, 2 parse error, 3 undecided
// (search budget or partial report), 4 verification violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "maxmatch/analysis.hpp"
#include "maxmatch/enumeration.hpp"
#include "maxmatch/errors.hpp"
#include "maxmatch/extremal.hpp"
#include "maxmatch/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitUndecided = 3;
constexpr int kExitViolation = 4;

long long budget_from_env() {
    const char* raw = std::getenv("MAXMATCH_BUDGET");
    if (!raw) return maxmatch::kDefaultSearchBudget;
    char* end = nullptr;
    long long value = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || value <= 0)
        throw std::invalid_argument("MAXMATCH_BUDGET must be a positive integer");
    return value;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_edge_list(const std::string& text) {
    for (char ch : text) {
        if (ch == '\n' || ch == '\r' || ch == ' ' || ch == '\t') continue;
        if (ch >= '0' && ch <= '9') return true;
        return ch == 'n' || ch == 'N';
    }
    return false;
}

maxmatch::Graph parse_input(const std::string& text, const std::string& format) {
    if (format == "graph6") return maxmatch::parse_graph6(text);
    if (format == "edgelist") return maxmatch::parse_edge_list(text);
    return looks_like_edge_list(text) ? maxmatch::parse_edge_list(text)
                                      : maxmatch::parse_graph6(text);
}

// Strips isolated vertices when allowed, rejects them otherwise. Also
// enforces the desk-scale caps common to analyze/decompose.
maxmatch::Graph prepare_graph(maxmatch::Graph g, bool allow_isolated) {
    auto isolated = g.isolated_vertices();
    if (!isolated.empty()) {
        if (!allow_isolated)
            throw std::invalid_argument(
                "graph has isolated vertices (" + std::to_string(isolated.size()) +
                "); pass --allow-isolated to strip them");
        std::vector<maxmatch::Vertex> keep;
        for (maxmatch::Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 0) keep.push_back(v);
        std::cerr << "warning: stripped " << isolated.size() << " isolated vertices\n";
        g = g.induced(keep).graph;
    }
    if (g.vertex_count() > 62)
        throw std::invalid_argument("graphs with more than 62 vertices are not supported");
    if (g.edge_count() == 0)
        throw std::invalid_argument("edgeless graph: the partition question is undefined");
    return g;
}

std::string write_output(const maxmatch::Graph& g, const std::string& format) {
    if (format == "edgelist") return maxmatch::write_edge_list(g);
    return maxmatch::write_graph6(g) + "\n";
}

struct VerifyArgs {
    std::string suite;
    int max_vertices = -1; // resolved per suite
    int max_edges = 8;
    int delta = 0;
    int nu = 0;
    int jobs = 1;
    int bound_slack = 0;
};

int run_verify(const VerifyArgs& args) {
    maxmatch::SuiteOptions options;
    options.jobs = args.jobs;
    options.chi_budget = budget_from_env();
    options.bound_slack = args.bound_slack;

    maxmatch::VerificationReport report;
    if (args.suite == "bound") {
        report = maxmatch::verify_edge_bound(args.max_vertices < 0 ? 8 : args.max_vertices, options);
    } else if (args.suite == "uniqueness") {
        if (args.delta < 2 || args.nu < 2)
            throw CLI::ValidationError("verify", "--suite uniqueness needs --delta and --nu (both >= 2)");
        report = maxmatch::verify_uniqueness(args.delta, args.nu, options);
    } else if (args.suite == "friendly") {
        report = maxmatch::verify_friendly_criterion(
            args.max_vertices < 0 ? 2 * args.max_edges : args.max_vertices, args.max_edges, options);
    } else if (args.suite == "class2") {
        report = maxmatch::verify_class2_theorem(args.max_vertices < 0 ? 8 : args.max_vertices, options);
    } else {
        report = maxmatch::verify_decomposition_theorem(args.max_vertices < 0 ? 7 : args.max_vertices,
                                                        options);
    }

    std::cout << maxmatch::to_json(report);
    std::cerr << "suite " << report.suite << ": " << report.graphs_examined << " graphs, "
              << report.violations.size() << " violations"
              << (report.partial ? " (partial)" : "") << ", "
              << report.elapsed_seconds << "s\n";
    if (!report.violations.empty()) return kExitViolation;
    if (report.partial) return kExitUndecided;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis and certification of graphs whose edge set partitions into maximum matchings"};
    app.require_subcommand(1);

    // analyze
    std::string in_path, in_format = "auto";
    bool allow_isolated = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "full analysis of one graph as JSON");
    analyze_cmd->add_option("input", in_path, "input file (stdin when omitted)");
    analyze_cmd->add_option("--format", in_format, "input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    analyze_cmd->add_flag("--allow-isolated", allow_isolated, "strip isolated vertices with a warning");

    // construct
    std::string kind, out_format = "graph6";
    int c_delta = 0, c_nu = 0;
    auto* construct_cmd = app.add_subcommand("construct", "emit an extremal construction");
    construct_cmd->add_option("kind", kind, "c | attaining | alternative")
        ->required()
        ->check(CLI::IsMember({"c", "attaining", "alternative"}));
    construct_cmd->add_option("--delta", c_delta, "maximum degree")->required();
    construct_cmd->add_option("--nu", c_nu, "matching number");
    construct_cmd->add_option("--format", out_format, "output format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    // decompose
    std::string d_path, d_format = "auto";
    bool d_allow_isolated = false;
    auto* decompose_cmd = app.add_subcommand("decompose", "class I decomposition as JSON");
    decompose_cmd->add_option("input", d_path, "input file (stdin when omitted)");
    decompose_cmd->add_option("--format", d_format, "input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    decompose_cmd->add_flag("--allow-isolated", d_allow_isolated, "strip isolated vertices with a warning");

    // verify
    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run an exhaustive verification suite");
    verify_cmd->add_option("--suite", verify_args.suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"bound", "uniqueness", "friendly", "class2", "decomposition"}));
    verify_cmd->add_option("--max-vertices", verify_args.max_vertices, "vertex cap for enumeration");
    verify_cmd->add_option("--max-edges", verify_args.max_edges, "edge cap (friendly suite)");
    verify_cmd->add_option("--delta", verify_args.delta, "target maximum degree (uniqueness suite)");
    verify_cmd->add_option("--nu", verify_args.nu, "target matching number (uniqueness suite)");
    verify_cmd->add_option("--jobs", verify_args.jobs, "worker threads")->check(CLI::Range(1, 64));
    verify_cmd->add_option("--bound-slack", verify_args.bound_slack,
                           "tighten the edge bound by this much (self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze_cmd->parsed()) {
            maxmatch::Graph g = prepare_graph(parse_input(read_input(in_path), in_format), allow_isolated);
            maxmatch::AnalysisResult result = maxmatch::analyze(g, budget_from_env());
            std::cout << maxmatch::to_json(result);
            std::cerr << "n=" << result.n << " m=" << result.m << " delta=" << result.delta
                      << " nu=" << result.nu << " chi'=" << result.chi << " class "
                      << to_string(result.vclass) << (result.friendly ? " friendly" : " not friendly")
                      << "\n";
            return kExitOk;
        }
        if (construct_cmd->parsed()) {
            maxmatch::Graph g(0);
            if (kind == "c") {
                g = maxmatch::construct_c(c_delta);
            } else if (kind == "attaining") {
                if (c_nu < 1) throw std::invalid_argument("construct attaining: --nu required (>= 1)");
                g = maxmatch::construct_attaining(c_delta, c_nu);
            } else {
                if (c_nu < 1) throw std::invalid_argument("construct alternative: --nu required (>= 1)");
                g = maxmatch::construct_alternative(c_delta, c_nu);
            }
            std::cout << write_output(g, out_format);
            std::cerr << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
            return kExitOk;
        }
        if (decompose_cmd->parsed()) {
            maxmatch::Graph g =
                prepare_graph(parse_input(read_input(d_path), d_format), d_allow_isolated);
            maxmatch::Decomposition d = maxmatch::decompose(g, budget_from_env());
            std::cout << maxmatch::to_json(d);
            std::cerr << d.parts.size() << " parts, " << d.removal_order.size() << " stars\n";
            return kExitOk;
        }
        return run_verify(verify_args);
    } catch (const maxmatch::ParseError& e) {
        std::cerr << "parse error at " << e.offset() << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const maxmatch::BudgetExceededError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const maxmatch::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitViolation;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
