#pragma once

// Internal: max-lex canonical labeling over adjacency bitmask rows.
// The canonical string of a labeled graph is the concatenation of the
// upper-triangle columns b_1..b_{n-1}, where b_k holds the bits
// a(0,k)..a(k-1,k) with a(0,k) most significant. A labeled graph is
// canonical when no relabeling produces a lexicographically larger
// string; deleting the last vertex of a canonical graph leaves a
// canonical graph, which is what the orderly generator relies on.

#include <cstdint>
#include <vector>

#include "maxmatch/graph.hpp"

namespace maxmatch::detail {

std::vector<std::uint64_t> adjacency_rows(const Graph& g);

// Classes of interchangeable vertices (equal open or closed
// neighborhoods). Swapping two same-class vertices is an automorphism, so
// the searches below only try one candidate per class at each node.
std::vector<int> twin_classes(const std::vector<std::uint64_t>& rows, int n);

// True iff the identity labeling attains the lexicographic maximum.
bool is_canonical(const std::vector<std::uint64_t>& rows, int n);

// Canonical relabeling of a (typically connected) graph.
Graph canonical_labeling(const Graph& g);

} // namespace maxmatch::detail
