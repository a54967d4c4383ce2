#include "maxmatch/matching.hpp"

#include <algorithm>

namespace maxmatch {

namespace {

// Edmonds' blossom algorithm, standard O(V^3) formulation. `blocked` (if
// set) is treated as deleted, which lets essential-vertex queries run in
// the host's labeling without rebuilding the graph.
struct Blossom {
    const Graph& g;
    int n;
    int blocked;
    std::vector<int> mate, parent, base;
    std::vector<char> in_queue, in_blossom;
    std::vector<int> queue;

    explicit Blossom(const Graph& graph, int blocked_vertex = -1)
        : g(graph),
          n(graph.vertex_count()),
          blocked(blocked_vertex),
          mate(static_cast<size_t>(n), -1),
          parent(static_cast<size_t>(n), -1),
          base(static_cast<size_t>(n), 0),
          in_queue(static_cast<size_t>(n), 0),
          in_blossom(static_cast<size_t>(n), 0) {}

    int lowest_common_base(int a, int b) {
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
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[mate[v]]] = 1;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    // BFS for an augmenting path from `root`; returns its free endpoint
    // or -1. On success the parent[] chain encodes the path.
    int find_path(int root) {
        std::fill(in_queue.begin(), in_queue.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        in_queue[root] = 1;
        queue.clear();
        queue.push_back(root);
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : g.neighbors(v)) {
                if (to == blocked) continue;
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
                    if (mate[to] == -1) return to;
                    in_queue[mate[to]] = 1;
                    queue.push_back(mate[to]);
                }
            }
        }
        return -1;
    }

    void augment(int finish) {
        int v = finish;
        while (v != -1) {
            int pv = parent[v];
            int next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }

    void run() {
        for (int v = 0; v < n; ++v) {
            if (v == blocked || mate[v] != -1) continue;
            int finish = find_path(v);
            if (finish != -1) augment(finish);
        }
    }

    Matching matching() const {
        Matching m;
        for (int v = 0; v < n; ++v)
            if (v != blocked && mate[v] > v) m.edges.push_back({v, mate[v]});
        return m;
    }
};

} // namespace

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : m.edges) {
        if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) return false;
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = 1;
    }
    return true;
}

Matching max_matching(const Graph& g) {
    Blossom solver(g);
    solver.run();
    return solver.matching();
}

int nu(const Graph& g) {
    return max_matching(g).size();
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.delta = g.max_degree();
    s.nu = nu(g);
    s.m = g.edge_count();
    s.isolated = g.isolated_vertices();
    return s;
}

std::vector<Vertex> essential_vertices(const Graph& g) {
    Blossom full(g);
    full.run();
    std::vector<Vertex> out;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        int partner = full.mate[x];
        if (partner == -1) continue; // some maximum matching misses x
        // Drop the edge covering x; one augmentation from the freed partner
        // decides whether nu survives the deletion of x.
        Blossom probe(g, x);
        probe.mate = full.mate;
        probe.mate[x] = -1;
        probe.mate[partner] = -1;
        int finish = probe.find_path(partner);
        if (finish == -1) out.push_back(x);
    }
    return out;
}

FactorCriticalResult is_factor_critical(const Graph& g) {
    FactorCriticalResult r;
    int n = g.vertex_count();
    if (n == 0 || n % 2 == 0) return r;
    if (g.components().size() != 1) return r;
    std::vector<Matching> certs;
    for (Vertex x = 0; x < n; ++x) {
        Blossom solver(g, x);
        solver.run();
        Matching m = solver.matching();
        if (2 * m.size() != n - 1) return r;
        certs.push_back(std::move(m));
    }
    r.value = true;
    r.near_perfect = std::move(certs);
    return r;
}

} // namespace maxmatch
