#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maxmatch/enumeration.hpp"
#include "maxmatch/extremal.hpp"
#include "maxmatch/graph.hpp"
#include "maxmatch/matching.hpp"
#include "oracle_support.hpp"

using namespace maxmatch;

TEST_CASE("edge_bound values") {
    CHECK(edge_bound(4, 2) == 10);
    CHECK(edge_bound(3, 3) == 10);
    CHECK(edge_bound(1, 5) == 5);
    CHECK(edge_bound(2, 2) == 6);
    CHECK_THROWS_AS(edge_bound(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(edge_bound(1, 0), std::invalid_argument);
}

TEST_CASE("edge_bound_relaxed") {
    CHECK(edge_bound_relaxed(3, 3) == Rational(21, 2));
    CHECK(edge_bound_relaxed(4, 2) == Rational(10, 1));
    CHECK(edge_bound_relaxed(2, 1) == Rational(3, 1));
    CHECK(edge_bound_relaxed(3, 3).str() == "21/2");

    SUBCASE("dominates the integer bound") {
        for (int delta = 1; delta <= 10; ++delta)
            for (int nu = 1; nu <= 10; ++nu)
                CHECK(Rational(edge_bound(delta, nu), 1) <= edge_bound_relaxed(delta, nu));
    }
}

TEST_CASE("extremal_spec remainder") {
    CHECK(extremal_spec(3, 3).t == 1);
    CHECK(extremal_spec(4, 2).t == 0);
    CHECK(extremal_spec(6, 5).t == 2);
    for (int delta = 1; delta <= 8; ++delta)
        for (int nu = 1; nu <= 8; ++nu) {
            ExtremalSpec s = extremal_spec(delta, nu);
            int c = (delta + 1) / 2;
            CHECK(s.t >= 0);
            CHECK(s.t < c);
            CHECK((s.t == 0) == (nu % c == 0));
        }
}

TEST_CASE("construct_c") {
    CHECK(construct_c(2) == complete_graph(3));
    CHECK(construct_c(4) == complete_graph(5));
    CHECK_THROWS_AS(construct_c(1), std::invalid_argument);

    SUBCASE("delta=3 matches the stated shape") {
        Graph c3 = construct_c(3);
        CHECK(c3.vertex_count() == 5);
        CHECK(c3.edge_count() == 7);
        // one vertex of degree 2j-2 = 2, all others of degree 3
        int low = 0;
        for (Vertex v = 0; v < 5; ++v)
            if (c3.degree(v) == 2) ++low;
        CHECK(low == 1);
        CHECK(c3.degree(3) == 2);
    }

    SUBCASE("stats for delta 2..8") {
        for (int delta = 2; delta <= 8; ++delta) {
            Graph c = construct_c(delta);
            int half_up = (delta + 1) / 2;
            GraphStats s = graph_stats(c);
            CHECK(s.nu == half_up);
            CHECK(s.delta == delta);
            CHECK(s.m == (2 * half_up + 1) * delta / 2);
            CHECK(is_factor_critical(c).value);
            if (delta % 2 == 1) {
                int low = 0;
                for (Vertex v = 0; v < c.vertex_count(); ++v)
                    if (c.degree(v) == delta - 1) ++low;
                CHECK(low == 1);
            }
        }
    }
}

TEST_CASE("construct_attaining") {
    SUBCASE("three triangles for delta=2 nu=3") {
        Graph g = construct_attaining(2, 3);
        CHECK(g.edge_count() == 9);
        CHECK(are_isomorphic(
            g, disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)), complete_graph(3))));
    }
    SUBCASE("star plus C for delta=3 nu=3") {
        Graph g = construct_attaining(3, 3);
        CHECK(g.edge_count() == 10);
        CHECK(are_isomorphic(g, disjoint_union(star_graph(3), construct_c(3))));
    }
    SUBCASE("K5 for delta=4 nu=2") {
        CHECK(are_isomorphic(construct_attaining(4, 2), complete_graph(5)));
    }
    SUBCASE("catalog cases") {
        CHECK(are_isomorphic(construct_attaining(1, 3),
                             disjoint_union(disjoint_union(path_graph(2), path_graph(2)), path_graph(2))));
        CHECK(are_isomorphic(construct_attaining(2, 1), complete_graph(3)));
        CHECK(are_isomorphic(construct_attaining(3, 1), star_graph(3)));
        CHECK(are_isomorphic(construct_attaining(7, 1), star_graph(7)));
    }
    SUBCASE("stats attain the bound across a parameter sweep") {
        for (int delta = 1; delta <= 7; ++delta)
            for (int nu_target = 1; nu_target <= 5; ++nu_target) {
                Graph g = construct_attaining(delta, nu_target);
                GraphStats s = graph_stats(g);
                CHECK(s.delta == delta);
                CHECK(s.nu == nu_target);
                CHECK(s.m == edge_bound(delta, nu_target));
                CHECK(s.isolated.empty());
            }
    }
}

TEST_CASE("construct_alternative") {
    CHECK_THROWS_AS(construct_alternative(4, 2), std::invalid_argument); // divisible: unique
    CHECK_THROWS_AS(construct_alternative(2, 3), std::invalid_argument); // delta=2 always divisible
    CHECK_THROWS_AS(construct_alternative(1, 2), std::invalid_argument);

    SUBCASE("t=1 coalescing at (3,3)") {
        Graph g = construct_alternative(3, 3);
        CHECK(g.vertex_count() == 7);
        CHECK(g.edge_count() == 10);
        CHECK(is_factor_critical(g).value);
        CHECK(graph_stats(g).delta == 3);
        CHECK(nu(g) == 3);
        CHECK_FALSE(are_isomorphic(g, construct_attaining(3, 3)));
    }
    SUBCASE("t=1 coalescing at (4,3) is a 4-regular 7-vertex graph") {
        Graph g = construct_alternative(4, 3);
        CHECK(g.vertex_count() == 7);
        CHECK(g.edge_count() == 14);
        CHECK(is_factor_critical(g).value);
        for (Vertex v = 0; v < 7; ++v) CHECK(g.degree(v) == 4);
        CHECK_FALSE(are_isomorphic(g, construct_attaining(4, 3)));
    }
    SUBCASE("t>=2 edge move at (6,5)") {
        Graph g = construct_alternative(6, 5);
        GraphStats s = graph_stats(g);
        CHECK(s.delta == 6);
        CHECK(s.nu == 5);
        CHECK(s.m == edge_bound(6, 5));
        CHECK_FALSE(are_isomorphic(g, construct_attaining(6, 5)));
        // the edge move shrinks the vertex count by one (a leaf is dropped)
        CHECK(g.vertex_count() == construct_attaining(6, 5).vertex_count() - 1);
    }
    SUBCASE("matching triples on a sweep of non-divisible parameters") {
        for (auto [delta, nu_target] : std::vector<std::pair<int, int>>{
                 {3, 2}, {3, 5}, {4, 3}, {5, 2}, {5, 3}, {6, 4}, {7, 5}}) {
            if (extremal_spec(delta, nu_target).t == 0) continue;
            Graph a = construct_attaining(delta, nu_target);
            Graph b = construct_alternative(delta, nu_target);
            GraphStats sa = graph_stats(a), sb = graph_stats(b);
            CHECK(sa.delta == sb.delta);
            CHECK(sa.nu == sb.nu);
            CHECK(sa.m == sb.m);
            CHECK_FALSE(are_isomorphic(a, b));
        }
    }
}

TEST_CASE("every enumerated graph respects the bound chain") {
    EnumerationOptions no_isolated;
    no_isolated.no_isolated = true;
    for (int n = 2; n <= 7; ++n)
        enumerate_graphs(n, no_isolated, [&](const Graph& g) {
            if (g.edge_count() == 0) return;
            int delta = g.max_degree();
            int nu_g = testoracle::brute_matching_number(g);
            CHECK(g.edge_count() <= edge_bound(delta, nu_g));
            CHECK(Rational(edge_bound(delta, nu_g), 1) <= edge_bound_relaxed(delta, nu_g));
        });
}
