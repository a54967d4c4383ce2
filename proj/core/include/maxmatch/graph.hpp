#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maxmatch {

using Vertex = int;

// Undirected edge, stored normalized with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Immutable simple undirected graph on vertices 0..n-1. No loops, no
// multi-edges; construction validates and normalizes. Safe to share
// between threads; every operation is a pure function.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges sorted by (u, v); the index of an edge in this vector is its
    // edge id everywhere in the library (colorings index by it).
    const std::vector<Edge>& edges() const { return edges_; }

    // Neighbors sorted ascending.
    const std::vector<Vertex>& neighbors(Vertex v) const;

    int degree(Vertex v) const;
    int max_degree() const;
    bool has_edge(Vertex a, Vertex b) const;
    int edge_index(Vertex a, Vertex b) const; // -1 if absent

    std::vector<Vertex> isolated_vertices() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

    // Induced subgraph plus the order-preserving map back to the host:
    // original_ids[new_id] = old_id, ascending.
    struct Induced;

    Induced delete_vertex(Vertex v) const;
    Induced induced(const std::vector<Vertex>& keep_sorted) const;

    // Connected components ordered by smallest original vertex id.
    std::vector<Induced> components() const;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

struct Graph::Induced {
    Graph graph;
    std::vector<Vertex> original_ids;
};

// Aggregate statistics; `nu` is filled by graph_stats() in matching.hpp.
struct GraphStats {
    int delta = 0;
    int nu = 0;
    int m = 0;
    std::vector<Vertex> isolated;
};

// Convenience builders used throughout tests and constructions.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves); // K_{1,leaves}, center 0
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);
Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

// graph6, standard small form N(n) with n <= 62. Writers never emit the
// optional ">>graph6<<" header; the parser accepts and strips it.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Plain text edge list: optional first line "n <count>", then "u v" lines
// with 0-based ids. Writer always emits the header and sorted edges.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

} // namespace maxmatch
