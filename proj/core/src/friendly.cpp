#include "maxmatch/friendly.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxmatch/enumeration.hpp"
#include "maxmatch/errors.hpp"

namespace maxmatch {

FriendlyCertificate is_friendly(const Graph& g, long long budget) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("is_friendly: edgeless graph");
    if (!g.isolated_vertices().empty())
        throw std::invalid_argument("is_friendly: graph has isolated vertices");

    ChromaticIndexResult chi = chromatic_index(g, budget);
    FriendlyCertificate cert;
    cert.chi = chi.chi;
    cert.vclass = chi.vclass;
    cert.nu = nu(g);
    cert.m = g.edge_count();
    cert.verdict = (static_cast<long long>(cert.chi) * cert.nu == cert.m);
    if (cert.verdict) {
        cert.partition = color_classes(g, chi.witness);
        // Any optimal coloring partitions E into maximum matchings; verify
        // rather than trust.
        for (const Matching& cls : cert.partition) {
            if (cls.size() != cert.nu || !is_valid_matching(g, cls))
                throw VerificationError(
                    "is_friendly: optimal coloring produced an unbalanced class "
                    "(counterexample to the balanced-coloring property)");
        }
    }
    return cert;
}

BalancedColoringsReport check_balanced_colorings(const Graph& g, long long enumeration_budget,
                                                 long long chi_budget) {
    FriendlyCertificate cert = is_friendly(g, chi_budget);
    if (!cert.verdict)
        throw std::invalid_argument("check_balanced_colorings: graph is not friendly");

    BalancedColoringsReport report;
    report.chi = cert.chi;
    report.nu = cert.nu;
    report.all_balanced = true;

    int m = g.edge_count();
    std::vector<std::vector<char>> used(static_cast<size_t>(g.vertex_count()),
                                        std::vector<char>(static_cast<size_t>(cert.chi), 0));
    std::vector<int> assignment(static_cast<size_t>(m), -1);
    std::vector<int> class_size(static_cast<size_t>(cert.chi), 0);
    long long nodes = 0;

    // Colorings are enumerated up to color permutation by allowing a new
    // color index only right after all smaller ones have appeared.
    auto dfs = [&](auto&& self, int pos, int max_used) -> void {
        if (report.partial) return;
        if (pos == m) {
            ++report.colorings_checked;
            for (int c = 0; c < cert.chi; ++c)
                if (class_size[c] != cert.nu) report.all_balanced = false;
            return;
        }
        const Edge& e = g.edges()[pos];
        int limit = std::min(cert.chi - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (used[e.u][c] || used[e.v][c]) continue;
            if (++nodes > enumeration_budget) {
                report.partial = true;
                return;
            }
            used[e.u][c] = used[e.v][c] = 1;
            ++class_size[c];
            assignment[pos] = c;
            self(self, pos + 1, std::max(max_used, c));
            used[e.u][c] = used[e.v][c] = 0;
            --class_size[c];
            assignment[pos] = -1;
        }
    };
    dfs(dfs, 0, -1);
    return report;
}

Class2Report check_class2_structure(const Graph& g, long long budget) {
    FriendlyCertificate cert = is_friendly(g, budget);
    Class2Report report;
    report.delta = g.max_degree();
    report.nu = cert.nu;
    auto comps = g.components();
    report.component_count = static_cast<int>(comps.size());

    if (!cert.verdict || cert.vclass != VizingClass::II || report.delta < 2 || report.nu < 2) {
        report.status = Class2Status::NotApplicable;
        report.detail = "hypotheses unmet (needs friendly, class II, delta >= 2, nu >= 2)";
        return report;
    }
    if (report.delta % 2 != 0) {
        report.status = Class2Status::Fail;
        report.detail = "delta is odd";
        return report;
    }
    if (report.nu % (report.delta / 2) != 0) {
        report.status = Class2Status::Fail;
        report.detail = "delta/2 does not divide nu";
        return report;
    }
    Graph expected = complete_graph(report.delta + 1);
    for (const auto& comp : comps) {
        if (!are_isomorphic(comp.graph, expected)) {
            report.status = Class2Status::Fail;
            report.detail = "component containing vertex " + std::to_string(comp.original_ids[0]) +
                            " is not K_" + std::to_string(report.delta + 1);
            return report;
        }
    }
    report.status = Class2Status::Pass;
    report.detail = "disjoint union of " + std::to_string(report.component_count) + " copies of K_" +
                    std::to_string(report.delta + 1);
    return report;
}

namespace {

// Current working graph of the decomposition, kept in host labels.
struct Working {
    Graph g;
    std::vector<Vertex> ids; // ids[local] = host vertex
};

Working drop_isolated(const Working& w) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < w.g.vertex_count(); ++v)
        if (w.g.degree(v) > 0) keep.push_back(v);
    if (static_cast<int>(keep.size()) == w.g.vertex_count()) return w;
    auto sub = w.g.induced(keep);
    Working next;
    next.g = std::move(sub.graph);
    next.ids.reserve(keep.size());
    for (Vertex v : sub.original_ids) next.ids.push_back(w.ids[v]);
    return next;
}

} // namespace

Decomposition decompose(const Graph& g, long long budget) {
    FriendlyCertificate cert = is_friendly(g, budget);
    if (!cert.verdict)
        throw std::invalid_argument("decompose: graph is not friendly");
    if (cert.vclass == VizingClass::II)
        throw std::invalid_argument(
            "decompose: class II graph; its structure is covered by check_class2_structure");

    int chi = cert.chi;
    int delta = g.max_degree();
    Decomposition out;
    out.chi = chi;

    Working w;
    w.g = g;
    w.ids.resize(static_cast<size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) w.ids[v] = v;

    while (w.g.edge_count() > 0) {
        std::vector<Vertex> essential = essential_vertices(w.g);
        if (essential.empty()) break;
        // Lowest host id among essential vertices keeps runs reproducible.
        Vertex local = essential[0];
        for (Vertex cand : essential)
            if (w.ids[cand] < w.ids[local]) local = cand;

        if (w.g.degree(local) != chi)
            throw VerificationError(
                "decompose: essential vertex of degree != chi' "
                "(counterexample to the essential-degree lemma)");

        StarPart star;
        star.center = w.ids[local];
        for (Vertex nb : w.g.neighbors(local)) star.leaves.push_back(w.ids[nb]);
        std::sort(star.leaves.begin(), star.leaves.end());
        if (static_cast<int>(star.leaves.size()) != delta)
            throw VerificationError("decompose: star is not K_{1,delta}");
        out.removal_order.push_back(star.center);
        out.parts.emplace_back(std::move(star));

        auto sub = w.g.delete_vertex(local);
        Working next;
        next.g = std::move(sub.graph);
        next.ids.reserve(sub.original_ids.size());
        for (Vertex v : sub.original_ids) next.ids.push_back(w.ids[v]);
        w = drop_isolated(next);

        if (w.g.edge_count() > 0) {
            FriendlyCertificate rest = is_friendly(w.g, budget);
            if (!rest.verdict || rest.chi != chi)
                throw VerificationError(
                    "decompose: remainder lost friendliness or chi' "
                    "(counterexample to the deletion lemma)");
        }
    }

    // What remains has no essential vertices: each non-trivial component
    // must be factor-critical, friendly, with the host's chi'.
    for (const auto& comp : w.g.components()) {
        if (comp.graph.edge_count() == 0) continue;
        if (!is_factor_critical(comp.graph).value)
            throw VerificationError("decompose: residual component is not factor-critical");
        FriendlyCertificate part_cert = is_friendly(comp.graph, budget);
        if (!part_cert.verdict || part_cert.chi != chi)
            throw VerificationError("decompose: residual component not friendly with host chi'");
        FactorCriticalPart part;
        part.subgraph = comp.graph;
        for (Vertex v : comp.original_ids) part.original_ids.push_back(w.ids[v]);
        out.parts.emplace_back(std::move(part));
    }

    // Exact partition of E(G): disjoint parts covering every edge once.
    long long covered = 0;
    std::vector<char> edge_used(static_cast<size_t>(g.edge_count()), 0);
    auto mark = [&](Vertex a, Vertex b) {
        int idx = g.edge_index(a, b);
        if (idx < 0 || edge_used[idx])
            throw VerificationError("decompose: parts overlap or leave E(G)");
        edge_used[idx] = 1;
        ++covered;
    };
    for (const auto& part : out.parts) {
        if (std::holds_alternative<StarPart>(part)) {
            const auto& s = std::get<StarPart>(part);
            for (Vertex leaf : s.leaves) mark(s.center, leaf);
        } else {
            const auto& f = std::get<FactorCriticalPart>(part);
            for (const Edge& e : f.subgraph.edges())
                mark(f.original_ids[e.u], f.original_ids[e.v]);
        }
    }
    if (covered != g.edge_count())
        throw VerificationError("decompose: parts do not cover E(G)");
    return out;
}

} // namespace maxmatch
