#pragma once

#include <vector>

#include "maxmatch/graph.hpp"
#include "maxmatch/matching.hpp"

namespace maxmatch::oracle {

// Exhaustive reference implementations. Deliberately naive and written
// against the definitions only; the verification suites pit the fast
// paths against these. Desk scale: tens of edges at most.

// Maximum matching size by depth-first search over edge subsets.
int brute_nu(const Graph& g);

// All maximum matchings, as edge-index bitmasks (host edge order).
std::vector<std::uint64_t> all_maximum_matchings(const Graph& g);

// Does E(G) split into maximum matchings? Exact cover search over the
// list above, memoized on the remaining-edge mask.
bool brute_partitions_into_maximum_matchings(const Graph& g);

// Smallest k <= max_colors admitting a proper edge coloring, by plain
// backtracking in natural edge order with no symmetry breaking.
// Returns -1 if none exists within max_colors.
int brute_chromatic_index(const Graph& g, int max_colors);

} // namespace maxmatch::oracle
