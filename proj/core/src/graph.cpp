#include "maxmatch/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "maxmatch/errors.hpp"

namespace maxmatch {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
    for (Edge& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("Graph: loop edge rejected");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge rejected");
    edges_ = std::move(edges);
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex id out of range");
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

int Graph::edge_index(Vertex a, Vertex b) const {
    Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<Vertex> Graph::isolated_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
        if (adj_[v].empty()) out.push_back(v);
    return out;
}

Graph::Induced Graph::induced(const std::vector<Vertex>& keep_sorted) const {
    std::vector<int> new_id(static_cast<size_t>(n_), -1);
    for (size_t i = 0; i < keep_sorted.size(); ++i) {
        check_vertex(keep_sorted[i]);
        if (i > 0 && keep_sorted[i] <= keep_sorted[i - 1])
            throw std::invalid_argument("Graph::induced: vertex list not strictly ascending");
        new_id[keep_sorted[i]] = static_cast<int>(i);
    }
    std::vector<Edge> kept;
    for (const Edge& e : edges_)
        if (new_id[e.u] >= 0 && new_id[e.v] >= 0)
            kept.push_back(make_edge(new_id[e.u], new_id[e.v]));
    return Induced{Graph(static_cast<int>(keep_sorted.size()), std::move(kept)), keep_sorted};
}

Graph::Induced Graph::delete_vertex(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> keep;
    keep.reserve(static_cast<size_t>(n_) - 1);
    for (Vertex u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced(keep);
}

std::vector<Graph::Induced> Graph::components() const {
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<Induced> out;
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : adj_[comp[head]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(induced(comp));
    }
    return out;
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, std::move(e));
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph(leaves + 1, std::move(e));
}

Graph petersen_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back(make_edge(i, (i + 1) % 5));
        e.push_back(make_edge(i, i + 5));
        e.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
    }
    return Graph(10, std::move(e));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    int off = a.vertex_count();
    for (const Edge& be : b.edges()) e.push_back({be.u + off, be.v + off});
    return Graph(off + b.vertex_count(), std::move(e));
}

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> e;
    e.reserve(pairs.size());
    for (auto [u, v] : pairs) e.push_back(make_edge(u, v));
    return Graph(n, std::move(e));
}

namespace {
constexpr int kG6Lo = 63;  // '?'
constexpr int kG6Hi = 126; // '~'
} // namespace

Graph parse_graph6(std::string_view text) {
    static constexpr std::string_view header = ">>graph6<<";
    size_t pos = 0;
    if (text.substr(0, header.size()) == header) pos = header.size();
    // Tolerate one trailing newline.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

    unsigned char first = static_cast<unsigned char>(text[pos]);
    if (first == kG6Hi)
        throw ParseError("graph6: size overflow, only n <= 62 supported", pos);
    if (first < kG6Lo || first > kG6Hi)
        throw ParseError("graph6: byte outside 63..126", pos);
    int n = first - kG6Lo;
    ++pos;

    long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
    long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(text.size() - pos) < bytes_needed)
        throw ParseError("graph6: truncated payload", text.size());
    if (static_cast<long long>(text.size() - pos) > bytes_needed)
        throw ParseError("graph6: trailing bytes after payload", pos + static_cast<size_t>(bytes_needed));

    std::vector<Edge> edges;
    long long bit = 0;
    // Payload is the upper triangle column by column: for each column v,
    // bits a(0,v)..a(v-1,v), packed big-endian in 6-bit groups.
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            size_t at = pos + static_cast<size_t>(bit / 6);
            unsigned char c = static_cast<unsigned char>(text[at]);
            if (c < kG6Lo || c > kG6Hi)
                throw ParseError("graph6: byte outside 63..126", at);
            int val = c - kG6Lo;
            if ((val >> (5 - bit % 6)) & 1) edges.push_back({u, v});
        }
    }
    // Padding bits must be checked for range too (full bytes already were
    // above whenever any data bit touched them; cover payload-only case).
    for (long long b = 0; b < bytes_needed; ++b) {
        unsigned char c = static_cast<unsigned char>(text[pos + static_cast<size_t>(b)]);
        if (c < kG6Lo || c > kG6Hi)
            throw ParseError("graph6: byte outside 63..126", pos + static_cast<size_t>(b));
    }
    return Graph(n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("write_graph6: only n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(kG6Lo + n));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kG6Lo + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(kG6Lo + (acc << (6 - nbits))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int declared_n = -1;
    long long max_id = -1;
    size_t lineno = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (line.empty()) continue;

        std::istringstream ss{std::string(line)};
        if (lineno == 1 && (line[0] == 'n' || line[0] == 'N')) {
            char tag;
            long long cnt;
            ss >> tag >> cnt;
            if (ss.fail() || cnt < 0) throw ParseError("edge list: bad vertex-count header", lineno);
            declared_n = static_cast<int>(cnt);
            continue;
        }
        long long u, v;
        ss >> u >> v;
        std::string rest;
        if (ss.fail() || (ss >> rest && !rest.empty()))
            throw ParseError("edge list: expected 'u v'", lineno);
        if (u < 0 || v < 0) throw ParseError("edge list: negative vertex id", lineno);
        if (u == v) throw ParseError("edge list: loop edge", lineno);
        Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw ParseError("edge list: duplicate edge", lineno);
        edges.push_back(e);
        max_id = std::max(max_id, std::max(u, v));
    }
    int n = declared_n >= 0 ? declared_n : static_cast<int>(max_id + 1);
    if (max_id >= n) throw ParseError("edge list: vertex id exceeds declared count", 1);
    return Graph(n, std::move(edges));
}

std::string write_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

} // namespace maxmatch
