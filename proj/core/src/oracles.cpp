#include "maxmatch/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace maxmatch::oracle {

namespace {

int brute_nu_rec(const Graph& g, int from, std::uint64_t used_vertices) {
    int best = 0;
    for (int i = from; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        if ((used_vertices >> e.u) & 1 || (used_vertices >> e.v) & 1) continue;
        std::uint64_t next = used_vertices | (1ull << e.u) | (1ull << e.v);
        best = std::max(best, 1 + brute_nu_rec(g, i + 1, next));
    }
    return best;
}

} // namespace

int brute_nu(const Graph& g) {
    if (g.vertex_count() > 62) throw std::invalid_argument("brute_nu: graph too large");
    return brute_nu_rec(g, 0, 0);
}

std::vector<std::uint64_t> all_maximum_matchings(const Graph& g) {
    if (g.edge_count() > 62) throw std::invalid_argument("all_maximum_matchings: too many edges");
    int target = brute_nu(g);
    std::vector<std::uint64_t> out;
    std::uint64_t mask = 0;
    std::uint64_t vertices = 0;
    auto dfs = [&](auto&& self, int from, int size) -> void {
        if (size == target) {
            out.push_back(mask);
            return;
        }
        if (g.edge_count() - from < target - size) return;
        for (int i = from; i < g.edge_count(); ++i) {
            const Edge& e = g.edges()[i];
            if ((vertices >> e.u) & 1 || (vertices >> e.v) & 1) continue;
            mask |= 1ull << i;
            vertices |= (1ull << e.u) | (1ull << e.v);
            self(self, i + 1, size + 1);
            mask &= ~(1ull << i);
            vertices &= ~((1ull << e.u) | (1ull << e.v));
        }
    };
    dfs(dfs, 0, 0);
    return out;
}

bool brute_partitions_into_maximum_matchings(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("brute_partitions_into_maximum_matchings: edgeless graph");
    int target = brute_nu(g);
    if (g.edge_count() % target != 0) return false;
    std::vector<std::uint64_t> matchings = all_maximum_matchings(g);
    std::uint64_t all = g.edge_count() == 64 ? ~0ull : (1ull << g.edge_count()) - 1;
    std::unordered_map<std::uint64_t, bool> memo;
    auto cover = [&](auto&& self, std::uint64_t remaining) -> bool {
        if (remaining == 0) return true;
        auto it = memo.find(remaining);
        if (it != memo.end()) return it->second;
        int lowest = std::countr_zero(remaining);
        bool ok = false;
        for (std::uint64_t m : matchings) {
            if (!((m >> lowest) & 1)) continue;
            if ((m & remaining) != m) continue;
            if (self(self, remaining & ~m)) {
                ok = true;
                break;
            }
        }
        memo[remaining] = ok;
        return ok;
    };
    return cover(cover, all);
}

namespace {

bool brute_color_rec(const Graph& g, int k, int pos, std::vector<std::vector<char>>& used) {
    if (pos == g.edge_count()) return true;
    const Edge& e = g.edges()[pos];
    for (int c = 0; c < k; ++c) {
        if (used[e.u][c] || used[e.v][c]) continue;
        used[e.u][c] = used[e.v][c] = 1;
        if (brute_color_rec(g, k, pos + 1, used)) return true;
        used[e.u][c] = used[e.v][c] = 0;
    }
    return false;
}

} // namespace

int brute_chromatic_index(const Graph& g, int max_colors) {
    if (g.edge_count() == 0) throw std::invalid_argument("brute_chromatic_index: edgeless graph");
    for (int k = 1; k <= max_colors; ++k) {
        std::vector<std::vector<char>> used(static_cast<size_t>(g.vertex_count()),
                                            std::vector<char>(static_cast<size_t>(k), 0));
        if (brute_color_rec(g, k, 0, used)) return k;
    }
    return -1;
}

} // namespace maxmatch::oracle
