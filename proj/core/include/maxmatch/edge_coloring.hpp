#pragma once

#include <vector>

#include "maxmatch/graph.hpp"
#include "maxmatch/matching.hpp"

namespace maxmatch {

// Proper edge coloring of a host graph. color[i] is the color of the
// host's i-th edge (host edge order), values in 0..colors-1.
struct EdgeColoring {
    int colors = 0;
    std::vector<int> color;
};

enum class VizingClass { I, II };

inline const char* to_string(VizingClass c) { return c == VizingClass::I ? "I" : "II"; }

bool is_proper(const Graph& g, const EdgeColoring& c);

// Color classes as matchings of the host, one per color.
std::vector<Matching> color_classes(const Graph& g, const EdgeColoring& c);

// Class sizes, descending.
std::vector<int> color_class_sizes(const EdgeColoring& c);

// Constructive proper coloring with at most max_degree+1 colors
// (Misra-Gries fan rotation and cd-path inversion). Deterministic.
// Rejects edgeless graphs.
EdgeColoring vizing_coloring(const Graph& g);

struct ChromaticIndexResult {
    int chi = 0;
    EdgeColoring witness;
    VizingClass vclass = VizingClass::I;
};

// Node budget for the exact chromatic-index search; overridable per call
// and via MAXMATCH_BUDGET in the CLI.
inline constexpr long long kDefaultSearchBudget = 100'000'000;

// Exact edge chromatic index. Searches exhaustively for a Delta-coloring
// (edges by descending degree sum, colors of one maximum-degree vertex
// pinned for symmetry breaking); falls back to chi = Delta+1 with the
// constructive witness. Throws BudgetExceededError rather than guessing.
ChromaticIndexResult chromatic_index(const Graph& g, long long node_budget = kDefaultSearchBudget);

} // namespace maxmatch
