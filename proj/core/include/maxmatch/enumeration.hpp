#pragma once

#include <functional>
#include <optional>
#include <string>

#include "maxmatch/graph.hpp"

namespace maxmatch {

// Canonical byte string: the graph6 encoding of the canonically relabeled
// graph (components canonically labeled by a max-lex search, then sorted).
// Two graphs have equal bytes iff they are isomorphic.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

struct EnumerationOptions {
    std::optional<int> max_edges;       // prunes subtrees (monotone)
    std::optional<int> max_degree;      // prunes subtrees (monotone)
    std::optional<int> max_matching;    // prunes subtrees (monotone)
    bool connected_only = false;        // filters emission
    bool no_isolated = false;           // filters emission
};

inline constexpr int kEnumerationCap = 10;

// Every simple graph on exactly n vertices, once per isomorphism class,
// via orderly generation with canonicity rejection. n <= 10.
void enumerate_graphs(int n, const EnumerationOptions& options,
                      const std::function<void(const Graph&)>& emit);

// Levels 1..n_max in turn. Classes with isolated vertices appear once per
// vertex count, like any other class of that order.
void enumerate_graphs_up_to(int n_max, const EnumerationOptions& options,
                            const std::function<void(const Graph&)>& emit);

} // namespace maxmatch
