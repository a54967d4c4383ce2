#include "maxmatch/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "canonical.hpp"
#include "generator.hpp"

namespace maxmatch {

Graph canonical_graph(const Graph& g) {
    // Canonically label each component, then lay the components out in
    // sorted byte order. Cheaper than a whole-graph search and the result
    // is still a complete isomorphism invariant.
    std::vector<std::pair<std::string, Graph>> parts;
    for (const auto& comp : g.components()) {
        Graph c = detail::canonical_labeling(comp.graph);
        parts.emplace_back(write_graph6(c), std::move(c));
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Graph out(0);
    for (const auto& [bytes, part] : parts) out = disjoint_union(out, part);
    return out;
}

CanonicalForm canonical_form(const Graph& g) {
    return write_graph6(canonical_graph(g));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

detail::GenLimits to_limits(int n_max, const EnumerationOptions& options) {
    detail::GenLimits limits;
    limits.n_max = n_max;
    limits.max_edges = options.max_edges;
    limits.max_degree = options.max_degree;
    limits.nu_cap = options.max_matching;
    return limits;
}

bool emit_ok(const Graph& g, const EnumerationOptions& options) {
    if (options.connected_only && g.components().size() != 1) return false;
    if (options.no_isolated && !g.isolated_vertices().empty()) return false;
    return true;
}

} // namespace

void enumerate_graphs(int n, const EnumerationOptions& options,
                      const std::function<void(const Graph&)>& emit) {
    if (n < 1 || n > kEnumerationCap)
        throw std::invalid_argument("enumerate_graphs: vertex count outside 1..10");
    detail::generate(to_limits(n, options), [&](const detail::GenNode& node) {
        if (node.g.vertex_count() == n && emit_ok(node.g, options)) emit(node.g);
    });
}

void enumerate_graphs_up_to(int n_max, const EnumerationOptions& options,
                            const std::function<void(const Graph&)>& emit) {
    if (n_max < 1 || n_max > kEnumerationCap)
        throw std::invalid_argument("enumerate_graphs_up_to: vertex count outside 1..10");
    detail::generate(to_limits(n_max, options), [&](const detail::GenNode& node) {
        if (emit_ok(node.g, options)) emit(node.g);
    });
}

} // namespace maxmatch
