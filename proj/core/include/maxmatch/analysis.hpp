#pragma once

#include <optional>
#include <string>

#include "maxmatch/friendly.hpp"
#include "maxmatch/graph.hpp"
#include "maxmatch/verify.hpp"

namespace maxmatch {

// Everything cmd_analyze reports for one graph. `input_graph6` echoes the
// graph actually analyzed (isolated vertices already stripped if the
// caller chose to).
struct AnalysisResult {
    std::string input_graph6;
    int n = 0;
    int m = 0;
    int delta = 0;
    int nu = 0;
    int chi = 0;
    VizingClass vclass = VizingClass::I;
    bool friendly = false;
    FriendlyCertificate certificate;
    std::optional<Decomposition> decomposition; // present iff friendly and class I
};

// Requires >= 1 edge and no isolated vertices.
AnalysisResult analyze(const Graph& g, long long budget = kDefaultSearchBudget);

// Stable JSON: fixed field order, canonically sorted arrays, compact
// single line plus trailing newline. Byte-identical across runs and job
// counts.
std::string to_json(const AnalysisResult& result);
std::string to_json(const Decomposition& decomposition);
std::string to_json(const VerificationReport& report);

} // namespace maxmatch
