#include "maxmatch/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxmatch/errors.hpp"
#include "maxmatch/matching.hpp"

namespace maxmatch {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 0) {
        num /= g;
        den /= g;
    }
}

bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

void check_params(int delta, int nu) {
    if (delta < 1 || nu < 1)
        throw std::invalid_argument("extremal: delta and nu must be positive");
}

int ceil_half(int delta) { return (delta + 1) / 2; }

void verify_stats(const Graph& g, int delta, int nu_target, long long m_target, const char* what) {
    GraphStats s = graph_stats(g);
    if (s.delta != delta || s.nu != nu_target || s.m != m_target || !s.isolated.empty())
        throw VerificationError(std::string(what) + ": constructed graph failed its own stats check");
}

} // namespace

ExtremalSpec extremal_spec(int delta, int nu) {
    check_params(delta, nu);
    int c = ceil_half(delta);
    return ExtremalSpec{delta, nu, nu - c * (nu / c)};
}

long long edge_bound(int delta, int nu) {
    check_params(delta, nu);
    int c = ceil_half(delta);
    return static_cast<long long>(delta) * nu + static_cast<long long>(nu / c) * (delta / 2);
}

Rational edge_bound_relaxed(int delta, int nu) {
    check_params(delta, nu);
    // nu * (delta + floor(delta/2)/ceil(delta/2))
    int c = ceil_half(delta);
    return Rational(static_cast<long long>(nu) * (static_cast<long long>(delta) * c + delta / 2), c);
}

Graph construct_c(int delta) {
    if (delta < 2) throw std::invalid_argument("construct_c: delta must be >= 2");
    Graph g;
    if (delta % 2 == 0) {
        g = complete_graph(delta + 1);
    } else {
        // K_{2j} minus the perfect matching {2i,2i+1}, then an apex (the
        // highest id) joined to vertices 0..2j-2.
        int j = (delta + 1) / 2;
        int base = 2 * j;
        std::vector<Edge> edges;
        for (int u = 0; u < base; ++u)
            for (int v = u + 1; v < base; ++v)
                if (!(u / 2 == v / 2)) edges.push_back({u, v});
        for (int u = 0; u < base - 1; ++u) edges.push_back({u, base});
        g = Graph(base + 1, std::move(edges));
    }
    int c = ceil_half(delta);
    long long m_target = (static_cast<long long>(2 * c + 1) * delta) / 2;
    verify_stats(g, delta, c, m_target, "construct_c");
    return g;
}

Graph construct_attaining(int delta, int nu) {
    check_params(delta, nu);
    Graph g(0);
    if (delta == 1) {
        for (int i = 0; i < nu; ++i) g = disjoint_union(g, path_graph(2));
    } else {
        ExtremalSpec spec = extremal_spec(delta, nu);
        int copies = nu / ceil_half(delta);
        for (int i = 0; i < spec.t; ++i) g = disjoint_union(g, star_graph(delta));
        Graph c = copies > 0 ? construct_c(delta) : Graph(0);
        for (int i = 0; i < copies; ++i) g = disjoint_union(g, c);
    }
    verify_stats(g, delta, nu, edge_bound(delta, nu), "construct_attaining");
    return g;
}

namespace {

// Two stars joined by the edge move: remove one leaf edge of the first
// star and connect its center to a leaf of the second. The detached leaf
// is omitted, so the component has 2*delta + 1 vertices and 2*delta edges.
Graph double_star(int delta) {
    std::vector<Edge> edges;
    int a = 0;                 // center 1, leaves 1..delta-1
    int w = delta;             // shared leaf
    int b = delta + 1;         // center 2, leaves delta+2..2*delta
    for (int i = 1; i < delta; ++i) edges.push_back({a, i});
    edges.push_back({a, w});
    edges.push_back(make_edge(w, b));
    for (int i = delta + 2; i <= 2 * delta; ++i) edges.push_back(make_edge(b, i));
    return Graph(2 * delta + 1, std::move(edges));
}

// Factor-critical coalescence for the t = 1 case: a spanning odd cycle on
// 2m+1 vertices plus chords chosen lexicographically under the degree cap
// until the edge target is met, backtracking when the greedy front stalls.
Graph coalesced_component(int delta) {
    int m = ceil_half(delta) + 1;
    int n = 2 * m + 1;
    long long target = delta + edge_bound(delta, ceil_half(delta)); // delta + |E(C)|
    std::vector<Edge> cycle;
    for (int i = 0; i < n; ++i) cycle.push_back(make_edge(i, (i + 1) % n));
    long long need = target - n;
    if (need < 0) throw VerificationError("coalesced_component: target below cycle length");

    std::vector<Edge> chords;
    for (int u = 0; u < n; ++u)
        for (int v = u + 2; v < n; ++v)
            if (!(u == 0 && v == n - 1)) chords.push_back({u, v});

    std::vector<int> deg(static_cast<size_t>(n), 2);
    std::vector<Edge> picked;
    auto dfs = [&](auto&& self, size_t from, long long left) -> bool {
        if (left == 0) return true;
        if (static_cast<long long>(chords.size() - from) < left) return false;
        for (size_t i = from; i < chords.size(); ++i) {
            const Edge& e = chords[i];
            if (deg[e.u] >= delta || deg[e.v] >= delta) continue;
            ++deg[e.u];
            ++deg[e.v];
            picked.push_back(e);
            if (self(self, i + 1, left - 1)) return true;
            picked.pop_back();
            --deg[e.u];
            --deg[e.v];
        }
        return false;
    };
    if (!dfs(dfs, 0, need))
        throw VerificationError("coalesced_component: no chord set reaches the edge target");

    std::vector<Edge> edges = cycle;
    edges.insert(edges.end(), picked.begin(), picked.end());
    Graph g(n, std::move(edges));
    if (!is_factor_critical(g).value)
        throw VerificationError("coalesced_component: not factor-critical");
    verify_stats(g, delta, m, target, "coalesced_component");
    return g;
}

} // namespace

Graph construct_alternative(int delta, int nu) {
    if (delta < 2 || nu < 2)
        throw std::invalid_argument("construct_alternative: need delta >= 2 and nu >= 2");
    ExtremalSpec spec = extremal_spec(delta, nu);
    if (spec.t == 0)
        throw std::invalid_argument(
            "construct_alternative: ceil(delta/2) divides nu, the attaining graph is unique");

    int copies = nu / ceil_half(delta);
    Graph g(0);
    if (spec.t >= 2) {
        g = double_star(delta);
        for (int i = 0; i < spec.t - 2; ++i) g = disjoint_union(g, star_graph(delta));
        Graph c = copies > 0 ? construct_c(delta) : Graph(0);
        for (int i = 0; i < copies; ++i) g = disjoint_union(g, c);
    } else {
        // t = 1: nu >= 2 forces at least one copy of C; coalesce it with
        // the lone star into a single factor-critical component.
        g = coalesced_component(delta);
        Graph c = copies > 1 ? construct_c(delta) : Graph(0);
        for (int i = 1; i < copies; ++i) g = disjoint_union(g, c);
    }
    verify_stats(g, delta, nu, edge_bound(delta, nu), "construct_alternative");
    return g;
}

} // namespace maxmatch
