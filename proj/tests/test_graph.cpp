#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "maxmatch/enumeration.hpp"
#include "maxmatch/errors.hpp"
#include "maxmatch/graph.hpp"

using namespace maxmatch;

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);          // loop
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);          // out of range
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // duplicate
    Graph g(3, {{2, 0}});
    CHECK(g.edges()[0] == Edge{0, 2}); // normalized
}

TEST_CASE("degree") {
    CHECK(complete_graph(3).degree(0) == 2);
    CHECK(star_graph(4).degree(0) == 4);
    CHECK_THROWS_AS(complete_graph(3).degree(3), std::invalid_argument);

    SUBCASE("handshake on a few graphs") {
        for (const Graph& g : {complete_graph(5), petersen_graph(), star_graph(6)}) {
            int total = 0;
            for (Vertex v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
            CHECK(total == 2 * g.edge_count());
        }
    }
}

TEST_CASE("delete_vertex") {
    SUBCASE("K4 minus a vertex is K3") {
        auto sub = complete_graph(4).delete_vertex(2);
        CHECK(sub.graph == complete_graph(3));
        CHECK(sub.original_ids == std::vector<Vertex>{0, 1, 3});
    }
    SUBCASE("star minus center is edgeless") {
        auto sub = star_graph(3).delete_vertex(0);
        CHECK(sub.graph.edge_count() == 0);
        CHECK(sub.graph.vertex_count() == 3);
    }
    SUBCASE("C6 minus any vertex is P5") {
        for (Vertex v = 0; v < 6; ++v) {
            auto sub = cycle_graph(6).delete_vertex(v);
            CHECK(are_isomorphic(sub.graph, path_graph(5)));
        }
    }
    SUBCASE("edge count drops by the degree") {
        Graph g = petersen_graph();
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            CHECK(g.delete_vertex(v).graph.edge_count() == g.edge_count() - g.degree(v));
    }
}

TEST_CASE("components") {
    SUBCASE("K3 + K14") {
        Graph g = disjoint_union(complete_graph(3), star_graph(4));
        auto comps = g.components();
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].graph == complete_graph(3));
        CHECK(comps[1].graph == star_graph(4));
        CHECK(comps[1].original_ids == std::vector<Vertex>{3, 4, 5, 6, 7});
    }
    SUBCASE("connected graph is one component") {
        auto comps = petersen_graph().components();
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].graph == petersen_graph());
    }
    SUBCASE("isolated vertices are K1 components") {
        CHECK(Graph(3).components().size() == 3);
    }
    SUBCASE("cover every vertex and edge exactly once") {
        Graph g = disjoint_union(disjoint_union(cycle_graph(4), Graph(2)), path_graph(3));
        auto comps = g.components();
        int vertices = 0, edges = 0;
        for (const auto& c : comps) {
            vertices += c.graph.vertex_count();
            edges += c.graph.edge_count();
        }
        CHECK(vertices == g.vertex_count());
        CHECK(edges == g.edge_count());
    }
}

TEST_CASE("graph6 format") {
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(complete_graph(4)) == "C~");
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(parse_graph6(">>graph6<<C~\n") == complete_graph(4));

    SUBCASE("parse errors carry offsets") {
        CHECK_THROWS_AS(parse_graph6(""), ParseError);
        CHECK_THROWS_AS(parse_graph6("garbage\x01"), ParseError);
        CHECK_THROWS_AS(parse_graph6("C"), ParseError);      // truncated payload
        CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);    // trailing bytes
        CHECK_THROWS_AS(parse_graph6("~??"), ParseError);    // long form (n > 62)
        CHECK_THROWS_AS(parse_graph6("\x20"), ParseError);   // byte below 63
    }

    SUBCASE("round trip on every graph up to 7 vertices") {
        for (int n = 1; n <= 7; ++n)
            enumerate_graphs(n, {}, [&](const Graph& g) {
                CHECK(parse_graph6(write_graph6(g)) == g);
            });
    }

    SUBCASE("round trip on fixed random graphs up to the n=62 cap") {
        std::mt19937 rng(20240817);
        for (int n : {9, 12, 30, 62}) {
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 4 == 0) edges.push_back({u, v});
            Graph g(n, edges);
            CHECK(parse_graph6(write_graph6(g)) == g);
        }
        CHECK_THROWS_AS(write_graph6(Graph(63)), std::invalid_argument);
    }
}

TEST_CASE("edge list format") {
    CHECK(parse_edge_list("0 1\n1 2\n2 0") == complete_graph(3));
    CHECK_THROWS_AS(parse_edge_list("0 1\n0 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 3"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), ParseError);

    Graph with_isolated = parse_edge_list("n 4\n0 1");
    CHECK(with_isolated.vertex_count() == 4);
    CHECK(with_isolated.edge_count() == 1);
    CHECK(with_isolated.isolated_vertices() == std::vector<Vertex>{2, 3});

    SUBCASE("round trip on every graph up to 6 vertices") {
        for (int n = 1; n <= 6; ++n)
            enumerate_graphs(n, {}, [&](const Graph& g) {
                CHECK(parse_edge_list(write_edge_list(g)) == g);
            });
    }

    SUBCASE("line numbers in errors") {
        try {
            parse_edge_list("0 1\n1 2\n1 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 3);
        }
    }
}
