#pragma once

// Test-side reference implementations, independent of the library's fast
// paths. Anything asserted as a frozen expected value in the tests was
// computed by one of these.

#include <cstdint>
#include <vector>

#include "maxmatch/graph.hpp"

namespace testoracle {

// Isomorphism by trying all vertex permutations (n <= 8).
bool isomorphic_by_permutation(const maxmatch::Graph& a, const maxmatch::Graph& b);

// Number of isomorphism classes of simple graphs on n vertices by
// Burnside's lemma over S_n: average of 2^(edge orbits) (n <= 8).
long long graph_count_burnside(int n);

// Same count by brute canonicalization of all 2^(n(n-1)/2) adjacency
// masks (n <= 5).
long long graph_count_matrix_orbits(int n);

// Number of all graphs on n vertices from per-order connected counts via
// multisets of connected pieces (Euler-transform style DP).
std::vector<long long> totals_from_connected_counts(const std::vector<long long>& connected, int n_max);

// Maximum matching size by exhaustive search over edge subsets.
int brute_matching_number(const maxmatch::Graph& g);

// Exact chromatic index by plain backtracking, colors tried 1..delta+1.
int brute_chi(const maxmatch::Graph& g);

// Brute-force partition of E into maximum matchings (test-local copy).
bool brute_friendly(const maxmatch::Graph& g);

} // namespace testoracle
