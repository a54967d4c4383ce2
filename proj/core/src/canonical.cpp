#include "canonical.hpp"

#include <algorithm>

namespace maxmatch::detail {

std::vector<std::uint64_t> adjacency_rows(const Graph& g) {
    std::vector<std::uint64_t> rows(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        rows[e.u] |= 1ull << e.v;
        rows[e.v] |= 1ull << e.u;
    }
    return rows;
}

std::vector<int> twin_classes(const std::vector<std::uint64_t>& rows, int n) {
    std::vector<int> cls(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) cls[v] = v;
    for (int u = 0; u < n; ++u) {
        if (cls[u] != u) continue;
        for (int v = u + 1; v < n; ++v) {
            if (cls[v] != v) continue;
            bool adjacent = (rows[u] >> v) & 1;
            std::uint64_t ru = rows[u], rv = rows[v];
            if (adjacent) {
                ru ^= 1ull << v;
                rv ^= 1ull << u;
            }
            if (ru == rv) cls[v] = u;
        }
    }
    return cls;
}

namespace {

struct CanonTester {
    const std::vector<std::uint64_t>& rows;
    int n;
    std::vector<int> twin;
    std::vector<std::uint64_t> target; // identity labeling's blocks
    std::vector<int> perm;
    std::uint64_t used = 0;

    CanonTester(const std::vector<std::uint64_t>& r, int nn) : rows(r), n(nn) {
        twin = twin_classes(rows, n);
        target.resize(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            std::uint64_t b = 0;
            for (int i = 0; i < k; ++i) b = (b << 1) | ((rows[k] >> i) & 1);
            target[k] = b;
        }
        perm.assign(static_cast<size_t>(n), -1);
    }

    std::uint64_t block(int k, int v) const {
        std::uint64_t b = 0;
        for (int i = 0; i < k; ++i) b = (b << 1) | ((rows[v] >> perm[i]) & 1);
        return b;
    }

    // Returns false as soon as some labeling beats the identity.
    bool walk(int k) {
        if (k == n) return true;
        std::uint64_t tried_classes = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            int cls = twin[v];
            if ((tried_classes >> cls) & 1) continue;
            tried_classes |= 1ull << cls;
            std::uint64_t b = block(k, v);
            if (b > target[k]) return false;
            if (b < target[k]) continue;
            perm[k] = v;
            used |= 1ull << v;
            bool ok = walk(k + 1);
            used &= ~(1ull << v);
            if (!ok) return false;
        }
        return true;
    }
};

struct CanonFinder {
    const std::vector<std::uint64_t>& rows;
    int n;
    std::vector<int> twin;
    std::vector<std::uint64_t> best;     // best complete block string found
    std::vector<int> best_perm;
    std::vector<std::uint64_t> blocks;   // current partial blocks
    std::vector<int> perm;
    std::uint64_t used = 0;

    CanonFinder(const std::vector<std::uint64_t>& r, int nn) : rows(r), n(nn) {
        twin = twin_classes(rows, n);
        blocks.assign(static_cast<size_t>(n), 0);
        perm.assign(static_cast<size_t>(n), -1);
    }

    std::uint64_t block(int k, int v) const {
        std::uint64_t b = 0;
        for (int i = 0; i < k; ++i) b = (b << 1) | ((rows[v] >> perm[i]) & 1);
        return b;
    }

    // Fill positions k..n-1 greedily (max block, lowest id) and record the
    // completion as the new best.
    void greedy_complete(int k) {
        std::uint64_t saved_used = used;
        for (int pos = k; pos < n; ++pos) {
            int pick = -1;
            std::uint64_t pick_block = 0;
            for (int v = 0; v < n; ++v) {
                if ((used >> v) & 1) continue;
                std::uint64_t b = block(pos, v);
                if (pick == -1 || b > pick_block) {
                    pick = v;
                    pick_block = b;
                }
            }
            perm[pos] = pick;
            blocks[pos] = pick_block;
            used |= 1ull << pick;
        }
        best.assign(blocks.begin(), blocks.end());
        best_perm.assign(perm.begin(), perm.end());
        used = saved_used;
    }

    // DFS over labelings whose prefix ties the best; any strictly larger
    // block re-seeds the best with a greedy completion first.
    void walk(int k) {
        if (k == n) return;
        std::vector<std::pair<std::uint64_t, int>> cands;
        std::uint64_t tried_classes = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            int cls = twin[v];
            if ((tried_classes >> cls) & 1) continue;
            tried_classes |= 1ull << cls;
            cands.emplace_back(block(k, v), v);
        }
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        for (auto [b, v] : cands) {
            if (b < best[k]) break;
            perm[k] = v;
            blocks[k] = b;
            used |= 1ull << v;
            if (b > best[k]) greedy_complete(k + 1);
            walk(k + 1);
            used &= ~(1ull << v);
        }
    }

    void run() {
        if (n == 0) return;
        greedy_complete(0);
        walk(0);
    }
};

} // namespace

bool is_canonical(const std::vector<std::uint64_t>& rows, int n) {
    if (n <= 1) return true;
    CanonTester t(rows, n);
    return t.walk(0);
}

Graph canonical_labeling(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return g;
    auto rows = adjacency_rows(g);
    CanonFinder f(rows, n);
    f.run();
    // best_perm[k] = original vertex at canonical position k.
    std::vector<int> pos(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) pos[f.best_perm[k]] = k;
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.push_back(make_edge(pos[e.u], pos[e.v]));
    return Graph(n, std::move(edges));
}

} // namespace maxmatch::detail
