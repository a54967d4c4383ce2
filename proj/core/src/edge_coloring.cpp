#include "maxmatch/edge_coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "maxmatch/errors.hpp"

namespace maxmatch {

bool is_proper(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.color.size()) != g.edge_count()) return false;
    std::vector<std::vector<char>> used(static_cast<size_t>(g.vertex_count()),
                                        std::vector<char>(static_cast<size_t>(c.colors), 0));
    for (int i = 0; i < g.edge_count(); ++i) {
        int col = c.color[i];
        if (col < 0 || col >= c.colors) return false;
        const Edge& e = g.edges()[i];
        if (used[e.u][col] || used[e.v][col]) return false;
        used[e.u][col] = used[e.v][col] = 1;
    }
    return true;
}

std::vector<Matching> color_classes(const Graph& g, const EdgeColoring& c) {
    std::vector<Matching> classes(static_cast<size_t>(c.colors));
    for (int i = 0; i < g.edge_count(); ++i)
        classes[c.color[i]].edges.push_back(g.edges()[i]);
    return classes;
}

std::vector<int> color_class_sizes(const EdgeColoring& c) {
    std::vector<int> sizes(static_cast<size_t>(c.colors), 0);
    for (int col : c.color) ++sizes[col];
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

namespace {

// Working state for Misra-Gries: for each vertex, the neighbor reached via
// each color (-1 if the color is free there).
struct MGState {
    const Graph& g;
    int k; // Delta + 1
    std::vector<std::vector<int>> at;
    std::vector<int> ecolor;

    MGState(const Graph& graph, int colors)
        : g(graph),
          k(colors),
          at(static_cast<size_t>(graph.vertex_count()), std::vector<int>(static_cast<size_t>(colors), -1)),
          ecolor(static_cast<size_t>(graph.edge_count()), -1) {}

    int free_color(int v) const {
        for (int c = 0; c < k; ++c)
            if (at[v][c] == -1) return c;
        return -1;
    }

    void set(int u, int v, int c) {
        int idx = g.edge_index(u, v);
        int old = ecolor[idx];
        if (old != -1) {
            at[u][old] = -1;
            at[v][old] = -1;
        }
        ecolor[idx] = c;
        if (c != -1) {
            at[u][c] = v;
            at[v][c] = u;
        }
    }

    int color_of(int u, int v) const { return ecolor[g.edge_index(u, v)]; }

    // Flip the maximal path starting at `start` that alternates colors c
    // and d, beginning with a d-colored edge. Edges are uncolored first so
    // the vertex tables never hold two edges of one color mid-flip.
    void invert_cd_path(int start, int c, int d) {
        std::vector<std::tuple<int, int, int>> path;
        int x = start, want = d;
        while (true) {
            int y = at[x][want];
            if (y == -1) break;
            path.emplace_back(x, y, want);
            x = y;
            want = (want == d) ? c : d;
        }
        for (auto [a, b, col] : path) set(a, b, -1);
        for (auto [a, b, col] : path) set(a, b, col == c ? d : c);
    }
};

} // namespace

EdgeColoring vizing_coloring(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("vizing_coloring: edgeless graph");
    int delta = g.max_degree();
    MGState st(g, delta + 1);

    for (const Edge& edge : g.edges()) {
        int u = edge.u, v = edge.v;
        // Maximal fan of u starting at v. Each next vertex is reached via
        // the smallest color free at the previous one and present at u.
        std::vector<int> fan{v};
        std::vector<char> in_fan(static_cast<size_t>(g.vertex_count()), 0);
        in_fan[v] = 1;
        while (true) {
            int last = fan.back();
            int next = -1;
            for (int c = 0; c < st.k; ++c) {
                if (st.at[last][c] != -1) continue;
                int w = st.at[u][c];
                if (w != -1 && !in_fan[w]) {
                    next = w;
                    break;
                }
            }
            if (next == -1) break;
            fan.push_back(next);
            in_fan[next] = 1;
        }

        int c = st.free_color(u);
        int d = st.free_color(fan.back());
        if (c != d) st.invert_cd_path(u, c, d);

        // Smallest fan prefix whose tip now has d free; the prefix must
        // still satisfy the fan property under the inverted colors.
        int j = -1;
        for (int cand = 0; cand < static_cast<int>(fan.size()); ++cand) {
            if (st.at[fan[cand]][d] != -1) continue;
            bool valid = true;
            for (int i = 0; i < cand; ++i) {
                int col = st.color_of(u, fan[i + 1]);
                if (col == -1 || st.at[fan[i]][col] != -1) {
                    valid = false;
                    break;
                }
            }
            if (valid) {
                j = cand;
                break;
            }
        }
        if (j == -1)
            throw VerificationError("vizing_coloring: no rotatable fan vertex (internal)");

        for (int i = 0; i < j; ++i) {
            int col = st.color_of(u, fan[i + 1]);
            st.set(u, fan[i + 1], -1);
            st.set(u, fan[i], col);
        }
        st.set(u, fan[j], d);
    }

    int used = 0;
    for (int c : st.ecolor) used = std::max(used, c + 1);
    EdgeColoring out;
    out.colors = used;
    out.color = st.ecolor;
    if (!is_proper(g, out))
        throw VerificationError("vizing_coloring: produced an improper coloring (internal)");
    return out;
}

namespace {

// Backtracking search for a proper coloring in exactly `k` colors.
// Deterministic: fixed edge order, colors ascending, budget counted per
// attempted assignment.
struct ExactSearch {
    const Graph& g;
    int k;
    long long budget;
    long long nodes = 0;
    std::vector<int> order;             // edge indices in search order
    std::vector<int> pinned;            // pinned color per search position, -1 if free
    std::vector<std::uint64_t> used_at; // bitmask of colors used at each vertex
    std::vector<int> assignment;        // color per search position

    ExactSearch(const Graph& graph, int colors, long long node_budget)
        : g(graph), k(colors), budget(node_budget),
          used_at(static_cast<size_t>(graph.vertex_count()), 0),
          assignment(static_cast<size_t>(graph.edge_count()), -1) {
        build_order();
    }

    void build_order() {
        int n = g.vertex_count();
        // Lowest-id maximum-degree vertex anchors the symmetry breaking:
        // its incident edges are searched first with pinned colors 0..d-1.
        int vstar = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > g.degree(vstar)) vstar = v;

        std::vector<int> star, rest;
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edges()[i];
            if (e.u == vstar || e.v == vstar)
                star.push_back(i);
            else
                rest.push_back(i);
        }
        std::sort(star.begin(), star.end(), [&](int a, int b) {
            int wa = g.edges()[a].u == vstar ? g.edges()[a].v : g.edges()[a].u;
            int wb = g.edges()[b].u == vstar ? g.edges()[b].v : g.edges()[b].u;
            return wa < wb;
        });
        std::sort(rest.begin(), rest.end(), [&](int a, int b) {
            const Edge& ea = g.edges()[a];
            const Edge& eb = g.edges()[b];
            int sa = g.degree(ea.u) + g.degree(ea.v);
            int sb = g.degree(eb.u) + g.degree(eb.v);
            if (sa != sb) return sa > sb;
            return ea < eb;
        });
        order = star;
        order.insert(order.end(), rest.begin(), rest.end());
        pinned.assign(order.size(), -1);
        for (size_t i = 0; i < star.size(); ++i) pinned[i] = static_cast<int>(i);
    }

    bool search(size_t pos) {
        if (pos == order.size()) return true;
        const Edge& e = g.edges()[order[pos]];
        std::uint64_t avail = ~(used_at[e.u] | used_at[e.v]) & ((1ull << k) - 1);
        if (pinned[pos] != -1) avail &= (1ull << pinned[pos]);
        while (avail) {
            int c = std::countr_zero(avail);
            avail &= avail - 1;
            if (++nodes > budget)
                throw BudgetExceededError("chromatic_index: search budget exceeded");
            used_at[e.u] |= 1ull << c;
            used_at[e.v] |= 1ull << c;
            assignment[pos] = c;
            if (search(pos + 1)) return true;
            used_at[e.u] &= ~(1ull << c);
            used_at[e.v] &= ~(1ull << c);
            assignment[pos] = -1;
        }
        return false;
    }

    bool run(EdgeColoring& out) {
        if (!search(0)) return false;
        out.colors = k;
        out.color.assign(static_cast<size_t>(g.edge_count()), -1);
        for (size_t pos = 0; pos < order.size(); ++pos)
            out.color[order[pos]] = assignment[pos];
        return true;
    }
};

} // namespace

ChromaticIndexResult chromatic_index(const Graph& g, long long node_budget) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("chromatic_index: edgeless graph");
    int delta = g.max_degree();
    ExactSearch search(g, delta, node_budget);
    ChromaticIndexResult r;
    if (search.run(r.witness)) {
        r.chi = delta;
        r.vclass = VizingClass::I;
    } else {
        r.chi = delta + 1;
        r.vclass = VizingClass::II;
        r.witness = vizing_coloring(g);
        if (r.witness.colors != delta + 1)
            throw VerificationError("chromatic_index: search found no Delta-coloring but the "
                                    "constructive coloring used fewer colors (internal)");
    }
    if (!is_proper(g, r.witness))
        throw VerificationError("chromatic_index: improper witness (internal)");
    return r;
}

} // namespace maxmatch
