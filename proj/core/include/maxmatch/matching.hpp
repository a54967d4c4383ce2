#pragma once

#include <vector>

#include "maxmatch/graph.hpp"

namespace maxmatch {

// A set of pairwise-disjoint edges of some host graph. Validity against a
// host is checked by is_valid_matching; functions returning a Matching
// guarantee it for the graph they were given.
struct Matching {
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(edges.size()); }
};

bool is_valid_matching(const Graph& g, const Matching& m);

// Maximum matching via repeated augmenting-path search with blossom
// contraction. Deterministic: vertices and adjacency scanned ascending.
Matching max_matching(const Graph& g);

int nu(const Graph& g);

GraphStats graph_stats(const Graph& g);

// Vertices covered by every maximum matching, i.e. x with nu(G\x) < nu(G).
// Decided with one seeded augmentation per vertex, not a fresh search.
std::vector<Vertex> essential_vertices(const Graph& g);

struct FactorCriticalResult {
    bool value = false;
    // On success, near_perfect[i] is a perfect matching of g minus the i-th
    // vertex, in host labels.
    std::vector<Matching> near_perfect;
};

// Direct check of the definition: connected, odd order, and g\x has a
// perfect matching for every x. K_1 counts as factor-critical.
FactorCriticalResult is_factor_critical(const Graph& g);

} // namespace maxmatch
