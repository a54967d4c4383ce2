#pragma once

#include <string>
#include <variant>
#include <vector>

#include "maxmatch/edge_coloring.hpp"
#include "maxmatch/graph.hpp"
#include "maxmatch/matching.hpp"

namespace maxmatch {

// Verdict of the partition-into-maximum-matchings test. A graph is
// friendly iff |E| = chi' * nu; on success the partition is the optimal
// coloring's classes, each re-verified to be a maximum matching.
struct FriendlyCertificate {
    bool verdict = false;
    int chi = 0;
    int nu = 0;
    int m = 0;
    VizingClass vclass = VizingClass::I;
    std::vector<Matching> partition; // chi classes of size nu when verdict holds
};

// Rejects edgeless graphs and graphs with isolated vertices.
FriendlyCertificate is_friendly(const Graph& g, long long budget = kDefaultSearchBudget);

struct BalancedColoringsReport {
    bool all_balanced = false;
    long long colorings_checked = 0;
    bool partial = false; // enumeration budget ran out
    int chi = 0;
    int nu = 0;
};

// Enumerates every proper chi'-coloring up to color permutation and
// confirms each class has size nu.
BalancedColoringsReport check_balanced_colorings(const Graph& g,
                                                 long long enumeration_budget = kDefaultSearchBudget,
                                                 long long chi_budget = kDefaultSearchBudget);

enum class Class2Status { Pass, Fail, NotApplicable };

struct Class2Report {
    Class2Status status = Class2Status::NotApplicable;
    std::string detail;
    int delta = 0;
    int nu = 0;
    int component_count = 0;
};

// For a friendly class II graph with delta >= 2 and nu >= 2: delta must be
// even, delta/2 must divide nu, and every component must be a complete
// graph on delta+1 vertices. Reports NotApplicable when the hypotheses
// fail, Fail (with the offending detail) on a genuine counterexample.
Class2Report check_class2_structure(const Graph& g, long long budget = kDefaultSearchBudget);

struct StarPart {
    Vertex center = 0;
    std::vector<Vertex> leaves; // host labels, ascending
};

struct FactorCriticalPart {
    Graph subgraph;
    std::vector<Vertex> original_ids;
};

using DecompositionPart = std::variant<StarPart, FactorCriticalPart>;

struct Decomposition {
    int chi = 0;
    std::vector<Vertex> removal_order;
    std::vector<DecompositionPart> parts;
};

// Class I decomposition: strip the lowest-id essential vertex while one
// exists, recording a star of exactly delta edges each time; the surviving
// non-trivial components are factor-critical parts. Every structural claim
// is re-verified during the run and a failure throws VerificationError.
Decomposition decompose(const Graph& g, long long budget = kDefaultSearchBudget);

} // namespace maxmatch
