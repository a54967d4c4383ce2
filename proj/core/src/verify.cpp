#include "maxmatch/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

#include "canonical.hpp"
#include "generator.hpp"
#include "maxmatch/enumeration.hpp"
#include "maxmatch/errors.hpp"
#include "maxmatch/extremal.hpp"
#include "maxmatch/friendly.hpp"
#include "maxmatch/matching.hpp"
#include "maxmatch/oracles.hpp"
#include "parallel.hpp"

namespace maxmatch {

namespace {

using detail::GenLimits;
using detail::GenNode;

constexpr int kRootLevel = 5;

// Deterministic fan-out over the orderly-generation tree: levels up to
// kRootLevel run serially, deeper subtrees are distributed by root. The
// per-root result buckets are merged in root order, so the output is
// independent of the job count.
template <typename T>
std::vector<T> generate_collect(const GenLimits& limits, int jobs,
                                const std::function<void(const GenNode&, std::vector<T>&)>& visit) {
    std::vector<T> out;
    if (limits.n_max <= kRootLevel || jobs <= 1) {
        detail::generate(limits, [&](const GenNode& node) { visit(node, out); });
        return out;
    }
    GenLimits prefix = limits;
    prefix.n_max = kRootLevel;
    std::vector<GenNode> roots;
    detail::generate(prefix, [&](const GenNode& node) {
        visit(node, out);
        if (node.g.vertex_count() == kRootLevel) roots.push_back(node);
    });
    std::function<std::vector<T>(const GenNode&)> task = [&](const GenNode& root) {
        std::vector<T> bucket;
        detail::continue_from(limits, root, [&](const GenNode& node) { visit(node, bucket); });
        return bucket;
    };
    auto buckets = detail::parallel_map<GenNode, std::vector<T>>(roots, jobs, task);
    for (auto& bucket : buckets)
        out.insert(out.end(), std::make_move_iterator(bucket.begin()),
                   std::make_move_iterator(bucket.end()));
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

bool eligible(const GenNode& node) {
    return node.g.edge_count() > 0 && node.g.isolated_vertices().empty();
}

void finalize(VerificationReport& report, Timer& timer) {
    std::sort(report.violations.begin(), report.violations.end());
    std::sort(report.hits.begin(), report.hits.end());
    std::sort(report.class_signatures.begin(), report.class_signatures.end());
    report.elapsed_seconds = timer.seconds();
}

} // namespace

VerificationReport verify_edge_bound(int n_max, const SuiteOptions& options) {
    if (n_max < 1 || n_max > kEnumerationCap)
        throw std::invalid_argument("verify_edge_bound: max vertices outside 1..10");
    Timer timer;
    VerificationReport report;
    report.suite = "bound";
    report.parameters = {{"max_vertices", n_max}, {"bound_slack", options.bound_slack}};

    struct Outcome {
        long long examined;
        std::vector<Violation> violations;
    };
    GenLimits limits;
    limits.n_max = n_max;
    auto outcomes = generate_collect<Outcome>(
        limits, options.jobs, [&](const GenNode& node, std::vector<Outcome>& bucket) {
            if (!eligible(node)) return;
            Outcome o{1, {}};
            int delta = node.g.max_degree();
            long long limit = edge_bound(delta, node.nu) - options.bound_slack;
            if (node.g.edge_count() > limit) {
                o.violations.push_back(
                    {canonical_form(node.g),
                     "m=" + std::to_string(node.g.edge_count()) + " exceeds bound(" +
                         std::to_string(delta) + "," + std::to_string(node.nu) +
                         ")=" + std::to_string(limit)});
            }
            bucket.push_back(std::move(o));
        });
    for (auto& o : outcomes) {
        report.graphs_examined += o.examined;
        report.violations.insert(report.violations.end(), o.violations.begin(), o.violations.end());
    }
    finalize(report, timer);
    return report;
}

namespace {

// Sorted canonical component forms; equal signatures mean isomorphic
// graphs, and assembling by component keeps every candidate small.
std::vector<std::string> component_signature(const Graph& g) {
    std::vector<std::string> parts;
    for (const auto& comp : g.components())
        parts.push_back(write_graph6(detail::canonical_labeling(comp.graph)));
    std::sort(parts.begin(), parts.end());
    return parts;
}

std::string join_signature(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ";";
        out += p;
    }
    return out;
}

struct Candidate {
    std::string g6; // canonical bytes
    int delta = 0;
    int n = 0;
};

// Connected graphs with nu(C) = k, max degree <= delta and exactly
// edge_bound(delta, k) edges. Every component of a bound-attaining graph
// has this form: summing Eq-(1) caps over components is tight, so each
// component sits at its own cap.
std::vector<Candidate> uniqueness_candidates(int delta, int k, int jobs) {
    long long m_target = edge_bound(delta, k);
    GenLimits limits;
    limits.n_max = static_cast<int>(m_target) + 1;
    limits.max_edges = static_cast<int>(m_target);
    limits.max_degree = delta;
    limits.nu_cap = k;
    limits.connected_target = true;
    auto found = generate_collect<Candidate>(
        limits, jobs, [&](const GenNode& node, std::vector<Candidate>& bucket) {
            if (node.g.edge_count() != m_target || node.nu != k) return;
            if (node.ncomp != 1) return;
            bucket.push_back(Candidate{write_graph6(detail::canonical_labeling(node.g)),
                                       node.g.max_degree(), node.g.vertex_count()});
        });
    std::sort(found.begin(), found.end(),
              [](const Candidate& a, const Candidate& b) { return a.g6 < b.g6; });
    return found;
}

} // namespace

VerificationReport verify_uniqueness(int delta, int nu_target, const SuiteOptions& options) {
    if (delta < 2 || nu_target < 2)
        throw std::invalid_argument("verify_uniqueness: needs delta >= 2 and nu >= 2");
    Timer timer;
    VerificationReport report;
    report.suite = "uniqueness";
    report.parameters = {{"delta", delta}, {"nu", nu_target}};

    ExtremalSpec spec = extremal_spec(delta, nu_target);
    report.expected_unique = (spec.t == 0);

    Graph attaining = construct_attaining(delta, nu_target);
    auto attaining_sig = component_signature(attaining);
    report.witness_attaining = join_signature(attaining_sig);

    std::vector<std::string> alternative_sig;
    if (spec.t != 0) {
        Graph alternative = construct_alternative(delta, nu_target);
        alternative_sig = component_signature(alternative);
        report.witness_alternative = join_signature(alternative_sig);
        if (alternative_sig == attaining_sig)
            report.violations.push_back(
                {canonical_form(attaining), "alternative construction is isomorphic to the attaining graph"});
    }

    bool exhaustive = (delta <= 4 && nu_target <= 3);
    report.partial = !exhaustive;
    if (!exhaustive) {
        finalize(report, timer);
        return report;
    }

    // Candidate components per matching number, then multiset assembly.
    std::vector<std::vector<Candidate>> by_k(static_cast<size_t>(nu_target) + 1);
    for (int k = 1; k <= nu_target; ++k)
        by_k[k] = uniqueness_candidates(delta, k, options.jobs);

    long long total_edges = edge_bound(delta, nu_target);
    std::vector<std::string> classes;
    std::vector<std::string> current;
    long long assembled = 0;

    auto assemble = [&](auto&& self, int k, size_t from, int nu_left, long long m_left,
                        int max_delta) -> void {
        if (nu_left == 0) {
            ++assembled;
            if (m_left == 0 && max_delta == delta) {
                auto sig = current;
                std::sort(sig.begin(), sig.end());
                classes.push_back(join_signature(sig));
            }
            return;
        }
        if (k < 1) return;
        if (k > nu_left) {
            self(self, nu_left, 0, nu_left, m_left, max_delta);
            return;
        }
        // use zero or more candidates of matching number k, then smaller k
        self(self, k - 1, 0, nu_left, m_left, max_delta);
        for (size_t i = from; i < by_k[k].size(); ++i) {
            const Candidate& cand = by_k[k][i];
            long long m_k = edge_bound(delta, k);
            if (m_k > m_left) continue;
            current.push_back(cand.g6);
            self(self, k, i, nu_left - k, m_left - m_k, std::max(max_delta, cand.delta));
            current.pop_back();
        }
    };
    assemble(assemble, nu_target, 0, nu_target, total_edges, 0);

    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    report.classes_found = static_cast<long long>(classes.size());
    report.class_signatures = classes;
    report.graphs_examined = assembled;

    auto contains = [&](const std::vector<std::string>& sig) {
        return std::binary_search(classes.begin(), classes.end(), join_signature(sig));
    };
    {
        auto sig = attaining_sig;
        std::sort(sig.begin(), sig.end());
        if (!contains(sig))
            report.violations.push_back(
                {canonical_form(attaining), "attaining construction missing from the enumerated classes"});
    }
    if (spec.t != 0) {
        auto sig = alternative_sig;
        std::sort(sig.begin(), sig.end());
        if (!contains(sig))
            report.violations.push_back(
                {report.witness_alternative, "alternative construction missing from the enumerated classes"});
    }
    if (report.expected_unique && report.classes_found != 1)
        report.violations.push_back(
            {report.witness_attaining,
             "expected exactly one attaining class, found " + std::to_string(report.classes_found)});
    if (!report.expected_unique && report.classes_found < 2)
        report.violations.push_back(
            {report.witness_attaining,
             "expected at least two attaining classes, found " + std::to_string(report.classes_found)});

    finalize(report, timer);
    return report;
}

VerificationReport verify_friendly_criterion(int n_max, int max_edges, const SuiteOptions& options) {
    if (max_edges < 1 || max_edges > 9)
        throw std::invalid_argument("verify_friendly_criterion: max edges outside 1..9");
    if (n_max < 2)
        throw std::invalid_argument("verify_friendly_criterion: max vertices too small");
    Timer timer;
    VerificationReport report;
    report.suite = "friendly";
    report.parameters = {{"max_vertices", n_max}, {"max_edges", max_edges}};

    // Connected pieces with >= 1 edge; a graph without isolated vertices
    // is exactly a multiset of such pieces, so assembling multisets keeps
    // the generator shallow.
    GenLimits limits;
    limits.n_max = std::min(n_max, max_edges + 1);
    limits.max_edges = max_edges;
    limits.connected_target = true;
    struct Piece {
        Graph g;
        int m;
        int n;
    };
    auto pieces = generate_collect<Piece>(
        limits, options.jobs, [&](const GenNode& node, std::vector<Piece>& bucket) {
            if (node.ncomp != 1 || node.g.edge_count() == 0) return;
            bucket.push_back(Piece{node.g, node.g.edge_count(), node.g.vertex_count()});
        });

    std::vector<Graph> assembled;
    Graph current(0);
    auto build = [&](auto&& self, size_t from, int m_used, int n_used) -> void {
        if (m_used > 0) assembled.push_back(current);
        for (size_t i = from; i < pieces.size(); ++i) {
            if (m_used + pieces[i].m > max_edges || n_used + pieces[i].n > n_max) continue;
            Graph previous = current;
            current = disjoint_union(current, pieces[i].g);
            self(self, i, m_used + pieces[i].m, n_used + pieces[i].n);
            current = std::move(previous);
        }
    };
    build(build, 0, 0, 0);

    std::function<std::optional<Violation>(const Graph&)> check =
        [&](const Graph& g) -> std::optional<Violation> {
        bool brute = oracle::brute_partitions_into_maximum_matchings(g);
        FriendlyCertificate cert = is_friendly(g, options.chi_budget);
        if (brute != cert.verdict)
            return Violation{canonical_form(g),
                             std::string("brute-force partition existence (") +
                                 (brute ? "yes" : "no") + ") disagrees with |E| = chi'*nu (" +
                                 (cert.verdict ? "yes" : "no") + ")"};
        return std::nullopt;
    };
    auto outcomes = detail::parallel_map<Graph, std::optional<Violation>>(assembled, options.jobs, check);
    report.graphs_examined = static_cast<long long>(assembled.size());
    for (auto& v : outcomes)
        if (v) report.violations.push_back(std::move(*v));

    finalize(report, timer);
    return report;
}

VerificationReport verify_class2_theorem(int n_max, const SuiteOptions& options) {
    if (n_max < 1 || n_max > kEnumerationCap)
        throw std::invalid_argument("verify_class2_theorem: max vertices outside 1..10");
    Timer timer;
    VerificationReport report;
    report.suite = "class2";
    report.parameters = {{"max_vertices", n_max}};

    struct Outcome {
        long long examined = 0;
        std::vector<Violation> violations;
        std::vector<std::string> hits;
    };
    GenLimits limits;
    limits.n_max = n_max;
    auto outcomes = generate_collect<Outcome>(
        limits, options.jobs, [&](const GenNode& node, std::vector<Outcome>& bucket) {
            if (!eligible(node)) return;
            Outcome o;
            o.examined = 1;
            FriendlyCertificate cert = is_friendly(node.g, options.chi_budget);
            if (cert.verdict && cert.vclass == VizingClass::II && node.g.max_degree() >= 2 &&
                cert.nu >= 2) {
                std::string form = canonical_form(node.g);
                o.hits.push_back(form);
                Class2Report structure = check_class2_structure(node.g, options.chi_budget);
                if (structure.status != Class2Status::Pass)
                    o.violations.push_back({form, "class II structure check failed: " + structure.detail});
            }
            bucket.push_back(std::move(o));
        });
    for (auto& o : outcomes) {
        report.graphs_examined += o.examined;
        report.violations.insert(report.violations.end(), o.violations.begin(), o.violations.end());
        report.hits.insert(report.hits.end(), o.hits.begin(), o.hits.end());
    }
    finalize(report, timer);
    return report;
}

VerificationReport verify_decomposition_theorem(int n_max, const SuiteOptions& options) {
    if (n_max < 1 || n_max > kEnumerationCap)
        throw std::invalid_argument("verify_decomposition_theorem: max vertices outside 1..10");
    Timer timer;
    VerificationReport report;
    report.suite = "decomposition";
    report.parameters = {{"max_vertices", n_max}};

    struct Outcome {
        long long examined = 0;
        std::vector<Violation> violations;
    };
    GenLimits limits;
    limits.n_max = n_max;
    auto outcomes = generate_collect<Outcome>(
        limits, options.jobs, [&](const GenNode& node, std::vector<Outcome>& bucket) {
            if (!eligible(node)) return;
            Outcome o;
            o.examined = 1;
            FriendlyCertificate cert = is_friendly(node.g, options.chi_budget);
            if (cert.verdict && cert.vclass == VizingClass::I) {
                try {
                    decompose(node.g, options.chi_budget);
                } catch (const VerificationError& err) {
                    o.violations.push_back({canonical_form(node.g), err.what()});
                }
            }
            bucket.push_back(std::move(o));
        });
    for (auto& o : outcomes) {
        report.graphs_examined += o.examined;
        report.violations.insert(report.violations.end(), o.violations.begin(), o.violations.end());
    }
    finalize(report, timer);
    return report;
}

} // namespace maxmatch
