#include "generator.hpp"

#include <bit>
#include <stdexcept>

#include "canonical.hpp"
#include "maxmatch/matching.hpp"

namespace maxmatch::detail {

namespace {

// Single seeded augmentation: nu grows by at most one when a vertex is
// appended, and only if an augmenting path from the new vertex exists.
bool augment_from(const Graph& g, std::vector<int>& mate, int root) {
    int n = g.vertex_count();
    std::vector<int> parent(static_cast<size_t>(n), -1), base(static_cast<size_t>(n));
    std::vector<char> in_queue(static_cast<size_t>(n), 0), in_blossom(static_cast<size_t>(n), 0);
    std::vector<int> queue;

    auto lowest_common_base = [&](int a, int b) {
        std::vector<char> mark(static_cast<size_t>(n), 0);
        for (;;) {
            a = base[a];
            mark[a] = 1;
            if (mate[a] == -1) break;
            a = parent[mate[a]];
        }
        for (;;) {
            b = base[b];
            if (mark[b]) return b;
            b = parent[mate[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[mate[v]]] = 1;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    };

    for (int i = 0; i < n; ++i) base[i] = i;
    in_queue[root] = 1;
    queue.push_back(root);
    int finish = -1;
    for (size_t head = 0; head < queue.size() && finish == -1; ++head) {
        int v = queue[head];
        for (int to : g.neighbors(v)) {
            if (base[v] == base[to] || mate[v] == to) continue;
            if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
                int b = lowest_common_base(v, to);
                std::fill(in_blossom.begin(), in_blossom.end(), 0);
                mark_path(v, b, to);
                mark_path(to, b, v);
                for (int i = 0; i < n; ++i) {
                    if (!in_blossom[base[i]]) continue;
                    base[i] = b;
                    if (!in_queue[i]) {
                        in_queue[i] = 1;
                        queue.push_back(i);
                    }
                }
            } else if (parent[to] == -1) {
                parent[to] = v;
                if (mate[to] == -1) {
                    finish = to;
                    break;
                }
                in_queue[mate[to]] = 1;
                queue.push_back(mate[to]);
            }
        }
    }
    if (finish == -1) return false;
    int v = finish;
    while (v != -1) {
        int pv = parent[v];
        int next = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = next;
    }
    return true;
}

GenNode root_node() {
    GenNode node;
    node.g = Graph(1);
    node.rows = {0};
    node.mate = {-1};
    node.nu = 0;
    node.ncomp = 1;
    return node;
}

struct Generator {
    const GenLimits& limits;
    const std::function<void(const GenNode&)>& visit;

    void descend(const GenNode& node) {
        visit(node);
        if (node.g.vertex_count() >= limits.n_max) return;
        expand(node, [this](const GenNode& child) { descend(child); });
    }

    void expand(const GenNode& node, const std::function<void(const GenNode&)>& sink) {
        int n = node.g.vertex_count();
        if (n >= 62) throw std::invalid_argument("generator: vertex cap exceeded");

        // Parent component labels, computed once per node.
        std::vector<int> label(static_cast<size_t>(n), -1);
        for (int s = 0; s < n; ++s) {
            if (label[s] != -1) continue;
            std::vector<int> stack{s};
            label[s] = s;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : node.g.neighbors(v))
                    if (label[w] == -1) {
                        label[w] = s;
                        stack.push_back(w);
                    }
            }
        }

        std::uint64_t full = (1ull << n) - 1;
        for (std::uint64_t mask = 0; mask <= full; ++mask) {
            int added = std::popcount(mask);
            if (limits.max_degree && added > *limits.max_degree) continue;
            if (limits.max_edges && node.g.edge_count() + added > *limits.max_edges) continue;
            if (limits.max_degree) {
                bool ok = true;
                for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
                    int j = std::countr_zero(bits);
                    if (node.g.degree(j) + 1 > *limits.max_degree) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
            }

            int ncomp;
            if (mask == 0) {
                ncomp = node.ncomp + 1;
            } else {
                std::uint64_t seen = 0;
                int hit = 0;
                for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
                    int j = std::countr_zero(bits);
                    if (!((seen >> label[j]) & 1)) {
                        seen |= 1ull << label[j];
                        ++hit;
                    }
                }
                ncomp = node.ncomp - hit + 1;
            }
            if (limits.connected_target && limits.max_edges) {
                int slack = *limits.max_edges - node.g.edge_count() - added;
                if (ncomp - 1 > slack) continue;
            }

            std::vector<std::uint64_t> rows = node.rows;
            rows.push_back(mask);
            for (std::uint64_t bits = mask; bits; bits &= bits - 1)
                rows[std::countr_zero(bits)] |= 1ull << n;
            if (!is_canonical(rows, n + 1)) continue;

            GenNode child;
            child.rows = std::move(rows);
            std::vector<Edge> edges = node.g.edges();
            for (std::uint64_t bits = mask; bits; bits &= bits - 1)
                edges.push_back({std::countr_zero(bits), n});
            child.g = Graph(n + 1, std::move(edges));
            child.ncomp = ncomp;

            child.mate = node.mate;
            child.mate.push_back(-1);
            child.nu = node.nu;
            if (mask != 0 && augment_from(child.g, child.mate, n)) ++child.nu;
            if (limits.nu_cap && child.nu > *limits.nu_cap) continue;

            sink(child);
        }
    }
};

} // namespace

void generate(const GenLimits& limits, const std::function<void(const GenNode&)>& visit) {
    if (limits.n_max < 1) return;
    Generator gen{limits, visit};
    gen.descend(root_node());
}

std::vector<GenNode> collect_level(const GenLimits& limits, int level) {
    std::vector<GenNode> out;
    GenLimits capped = limits;
    capped.n_max = level;
    generate(capped, [&](const GenNode& node) {
        if (node.g.vertex_count() == level) out.push_back(node);
    });
    return out;
}

void continue_from(const GenLimits& limits, const GenNode& root,
                   const std::function<void(const GenNode&)>& visit) {
    Generator gen{limits, visit};
    gen.expand(root, [&](const GenNode& child) { gen.descend(child); });
}

} // namespace maxmatch::detail
