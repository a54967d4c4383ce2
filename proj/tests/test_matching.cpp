#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maxmatch/enumeration.hpp"
#include "maxmatch/graph.hpp"
#include "maxmatch/matching.hpp"
#include "oracle_support.hpp"

using namespace maxmatch;

TEST_CASE("max_matching basics") {
    CHECK(nu(complete_graph(4)) == 2);
    CHECK(nu(cycle_graph(5)) == 2);
    CHECK(nu(Graph(0)) == 0);
    CHECK(nu(Graph(3)) == 0);
    for (int leaves : {1, 3, 7}) CHECK(nu(star_graph(leaves)) == 1);

    SUBCASE("Petersen graph has a perfect matching") {
        // frozen from the exhaustive oracle below
        CHECK(testoracle::brute_matching_number(petersen_graph()) == 5);
        CHECK(nu(petersen_graph()) == 5);
    }

    SUBCASE("returned matchings are valid") {
        for (const Graph& g : {petersen_graph(), complete_graph(7), cycle_graph(9)}) {
            Matching m = max_matching(g);
            CHECK(is_valid_matching(g, m));
        }
    }

    SUBCASE("deterministic output") {
        Matching a = max_matching(petersen_graph());
        Matching b = max_matching(petersen_graph());
        CHECK(a.edges == b.edges);
    }
}

TEST_CASE("oracle equivalence on all graphs up to 7 vertices") {
    long long checked = 0;
    for (int n = 1; n <= 7; ++n)
        enumerate_graphs(n, {}, [&](const Graph& g) {
            if (g.edge_count() > 12) return;
            CHECK(nu(g) == testoracle::brute_matching_number(g));
            ++checked;
        });
    CHECK(checked > 1000);
}

TEST_CASE("essential vertices") {
    CHECK(essential_vertices(star_graph(3)) == std::vector<Vertex>{0});
    CHECK(essential_vertices(complete_graph(3)).empty());
    // path a-b-c-d: every vertex essential (brute-checked per vertex below)
    CHECK(essential_vertices(path_graph(4)) == std::vector<Vertex>{0, 1, 2, 3});

    SUBCASE("agrees with recomputing nu from scratch, all graphs up to 6 vertices") {
        for (int n = 1; n <= 6; ++n)
            enumerate_graphs(n, {}, [&](const Graph& g) {
                auto essential = essential_vertices(g);
                int base = testoracle::brute_matching_number(g);
                for (Vertex x = 0; x < g.vertex_count(); ++x) {
                    int reduced = testoracle::brute_matching_number(g.delete_vertex(x).graph);
                    CHECK(base - reduced <= 1);
                    bool is_essential = reduced < base;
                    bool reported =
                        std::find(essential.begin(), essential.end(), x) != essential.end();
                    CHECK(is_essential == reported);
                }
            });
    }
}

TEST_CASE("factor-critical") {
    CHECK(is_factor_critical(cycle_graph(5)).value);
    CHECK_FALSE(is_factor_critical(complete_graph(4)).value);
    CHECK_FALSE(is_factor_critical(star_graph(3)).value);
    CHECK(is_factor_critical(Graph(1)).value); // K_1, vacuously
    CHECK_FALSE(is_factor_critical(disjoint_union(cycle_graph(5), cycle_graph(5))).value);

    SUBCASE("certificates are perfect matchings of g minus x") {
        auto r = is_factor_critical(cycle_graph(7));
        REQUIRE(r.value);
        REQUIRE(r.near_perfect.size() == 7);
        for (Vertex x = 0; x < 7; ++x) {
            const Matching& m = r.near_perfect[x];
            CHECK(m.size() == 3);
            CHECK(is_valid_matching(cycle_graph(7), m));
            for (const Edge& e : m.edges) {
                CHECK(e.u != x);
                CHECK(e.v != x);
            }
        }
    }

    SUBCASE("Gallai cross-check on all connected graphs up to 7 vertices") {
        // no essential vertices <=> factor-critical, and then |V| = 2 nu + 1
        EnumerationOptions connected;
        connected.connected_only = true;
        for (int n = 1; n <= 7; ++n)
            enumerate_graphs(n, connected, [&](const Graph& g) {
                bool no_essential = essential_vertices(g).empty();
                auto fc = is_factor_critical(g);
                CHECK(no_essential == fc.value);
                if (fc.value) CHECK(g.vertex_count() == 2 * nu(g) + 1);
                if (fc.value) CHECK(essential_vertices(g).empty());
            });
    }
}

TEST_CASE("nu bounds under vertex deletion") {
    for (const Graph& g : {petersen_graph(), complete_graph(6), star_graph(5)}) {
        int base = nu(g);
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
            int reduced = nu(g.delete_vertex(x).graph);
            CHECK(reduced >= base - 1);
            CHECK(reduced <= base);
        }
    }
}

TEST_CASE("graph_stats") {
    GraphStats s = graph_stats(disjoint_union(complete_graph(4), Graph(2)));
    CHECK(s.delta == 3);
    CHECK(s.nu == 2);
    CHECK(s.m == 6);
    CHECK(s.isolated == std::vector<Vertex>{4, 5});
}
