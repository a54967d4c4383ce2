#pragma once

// Internal: orderly generation of simple graphs up to isomorphism.
// Extend-by-vertex with canonicity rejection against the max-lex string
// (see canonical.hpp). Prunes are restricted to monotone properties:
// edge count, max degree, and matching number never decrease when a
// vertex is appended, so cutting a subtree on them is sound.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "maxmatch/graph.hpp"

namespace maxmatch::detail {

struct GenLimits {
    int n_max = 0;
    std::optional<int> max_edges;
    std::optional<int> max_degree;
    std::optional<int> nu_cap;
    // When the caller only keeps connected results and max_edges is an
    // exact target, subtrees that can no longer merge their components
    // within the remaining edge budget are cut.
    bool connected_target = false;
};

struct GenNode {
    Graph g;
    std::vector<std::uint64_t> rows;
    std::vector<int> mate; // incrementally maintained maximum matching
    int nu = 0;
    int ncomp = 0;
};

// Calls visit for every canonical graph on 1..n_max vertices that
// survives the prunes, in a fixed depth-first order.
void generate(const GenLimits& limits, const std::function<void(const GenNode&)>& visit);

// All surviving canonical graphs on exactly `level` vertices.
std::vector<GenNode> collect_level(const GenLimits& limits, int level);

// Visits the strict descendants of `root` (levels root.n+1 .. n_max).
void continue_from(const GenLimits& limits, const GenNode& root,
                   const std::function<void(const GenNode&)>& visit);

} // namespace maxmatch::detail
