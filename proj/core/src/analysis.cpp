#include "maxmatch/analysis.hpp"

#include <algorithm>

#include "json.hpp"

namespace maxmatch {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json edge_array(const Edge& e) { return ordered_json::array({e.u, e.v}); }

ordered_json matching_array(const Matching& m) {
    std::vector<Edge> edges = m.edges;
    std::sort(edges.begin(), edges.end());
    ordered_json out = ordered_json::array();
    for (const Edge& e : edges) out.push_back(edge_array(e));
    return out;
}

ordered_json partition_array(const std::vector<Matching>& classes) {
    std::vector<ordered_json> parts;
    for (const Matching& m : classes) parts.push_back(matching_array(m));
    std::sort(parts.begin(), parts.end(),
              [](const ordered_json& a, const ordered_json& b) { return a.dump() < b.dump(); });
    ordered_json out = ordered_json::array();
    for (auto& p : parts) out.push_back(std::move(p));
    return out;
}

ordered_json decomposition_json(const Decomposition& d) {
    ordered_json out;
    out["chi_prime"] = d.chi;
    out["removal_order"] = d.removal_order;
    ordered_json parts = ordered_json::array();
    for (const auto& part : d.parts) {
        ordered_json p;
        if (std::holds_alternative<StarPart>(part)) {
            const auto& s = std::get<StarPart>(part);
            p["kind"] = "star";
            p["center"] = s.center;
            p["leaves"] = s.leaves;
            ordered_json edges = ordered_json::array();
            for (Vertex leaf : s.leaves) edges.push_back(edge_array(make_edge(s.center, leaf)));
            p["edges"] = edges;
        } else {
            const auto& f = std::get<FactorCriticalPart>(part);
            p["kind"] = "factor_critical";
            p["vertices"] = f.original_ids;
            p["graph6"] = write_graph6(f.subgraph);
            ordered_json edges = ordered_json::array();
            std::vector<Edge> host_edges;
            for (const Edge& e : f.subgraph.edges())
                host_edges.push_back(make_edge(f.original_ids[e.u], f.original_ids[e.v]));
            std::sort(host_edges.begin(), host_edges.end());
            for (const Edge& e : host_edges) edges.push_back(edge_array(e));
            p["edges"] = edges;
        }
        parts.push_back(std::move(p));
    }
    out["parts"] = parts;
    return out;
}

std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

} // namespace

AnalysisResult analyze(const Graph& g, long long budget) {
    AnalysisResult r;
    r.input_graph6 = write_graph6(g);
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.delta = g.max_degree();
    r.certificate = is_friendly(g, budget);
    r.nu = r.certificate.nu;
    r.chi = r.certificate.chi;
    r.vclass = r.certificate.vclass;
    r.friendly = r.certificate.verdict;
    if (r.friendly && r.vclass == VizingClass::I) r.decomposition = decompose(g, budget);
    return r;
}

std::string to_json(const AnalysisResult& result) {
    ordered_json out;
    out["input"] = result.input_graph6;
    out["n"] = result.n;
    out["m"] = result.m;
    out["delta"] = result.delta;
    out["nu"] = result.nu;
    out["chi_prime"] = result.chi;
    out["vizing_class"] = to_string(result.vclass);
    out["friendly"] = result.friendly;
    if (result.friendly) {
        out["partition"] = partition_array(result.certificate.partition);
    } else {
        ordered_json witness;
        witness["m"] = result.m;
        witness["chi_prime"] = result.chi;
        witness["nu"] = result.nu;
        witness["chi_nu"] = static_cast<long long>(result.chi) * result.nu;
        out["witness"] = witness;
    }
    if (result.decomposition) out["decomposition"] = decomposition_json(*result.decomposition);
    return dump(out);
}

std::string to_json(const Decomposition& decomposition) {
    return dump(decomposition_json(decomposition));
}

std::string to_json(const VerificationReport& report) {
    ordered_json out;
    out["suite"] = report.suite;
    ordered_json params;
    for (const auto& [key, value] : report.parameters) params[key] = value;
    out["parameters"] = params;
    out["graphs_examined"] = report.graphs_examined;
    if (report.suite == "uniqueness") {
        out["expected_unique"] = report.expected_unique;
        if (report.classes_found >= 0) out["classes_found"] = report.classes_found;
        if (!report.class_signatures.empty()) out["classes"] = report.class_signatures;
        out["witness_attaining"] = report.witness_attaining;
        if (!report.witness_alternative.empty())
            out["witness_alternative"] = report.witness_alternative;
    }
    if (report.suite == "class2") out["hits"] = report.hits;
    ordered_json violations = ordered_json::array();
    for (const Violation& v : report.violations) {
        ordered_json item;
        item["graph6"] = v.graph6;
        item["detail"] = v.detail;
        violations.push_back(std::move(item));
    }
    out["violations"] = violations;
    out["partial"] = report.partial;
    out["pass"] = report.pass();
    return dump(out);
}

} // namespace maxmatch
