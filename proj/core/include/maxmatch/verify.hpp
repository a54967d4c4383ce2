#pragma once

#include <map>
#include <string>
#include <vector>

#include "maxmatch/edge_coloring.hpp"
#include "maxmatch/graph.hpp"

namespace maxmatch {

struct Violation {
    std::string graph6; // canonical form of the offending graph
    std::string detail;

    friend auto operator<=>(const Violation&, const Violation&) = default;
};

// Outcome of one exhaustive suite. Reports are deterministic: violations
// and hit lists are canonically sorted and identical for any job count.
// elapsed_seconds is informational only and never serialized.
struct VerificationReport {
    std::string suite;
    std::map<std::string, long long> parameters;
    long long graphs_examined = 0;
    std::vector<Violation> violations;
    bool partial = false;
    double elapsed_seconds = 0.0;

    // suite-specific extras
    long long classes_found = -1;                 // uniqueness
    std::vector<std::string> class_signatures;    // uniqueness (exhaustive)
    std::string witness_attaining;                // uniqueness
    std::string witness_alternative;              // uniqueness (may be empty)
    bool expected_unique = false;                 // uniqueness
    std::vector<std::string> hits;                // class2: friendly class II graphs found

    bool pass() const { return violations.empty(); }
};

struct SuiteOptions {
    int jobs = 1;
    long long chi_budget = kDefaultSearchBudget;
    int bound_slack = 0; // bound suite self-test: tighten the bound by this much
};

// Eq-bound sweep: every isomorphism class without isolated vertices on
// <= n_max vertices satisfies |E| <= edge_bound(delta, nu) - slack.
VerificationReport verify_edge_bound(int n_max, const SuiteOptions& options = {});

// Counts isomorphism classes attaining the bound for (delta, nu) by
// exhaustive component assembly when delta <= 4 and nu <= 3; otherwise
// verifies the two constructive witnesses only and flags the report
// partial. Expects exactly one class under divisibility, at least two
// otherwise.
VerificationReport verify_uniqueness(int delta, int nu, const SuiteOptions& options = {});

// Friendliness criterion: brute-force partition existence against the
// |E| = chi' * nu test, over all graphs with no isolated vertices,
// >= 1 edge, <= max_edges edges and <= n_max vertices.
VerificationReport verify_friendly_criterion(int n_max, int max_edges = 8,
                                             const SuiteOptions& options = {});

// Every friendly class II graph (delta >= 2, nu >= 2, no isolated
// vertices, <= n_max vertices) must be a disjoint union of K_{delta+1}
// with delta even and delta/2 | nu. Hits are reported.
VerificationReport verify_class2_theorem(int n_max, const SuiteOptions& options = {});

// Every friendly class I graph without isolated vertices on <= n_max
// vertices must decompose with all structural invariants intact.
VerificationReport verify_decomposition_theorem(int n_max, const SuiteOptions& options = {});

} // namespace maxmatch
