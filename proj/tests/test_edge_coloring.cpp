#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maxmatch/edge_coloring.hpp"
#include "maxmatch/enumeration.hpp"
#include "maxmatch/errors.hpp"
#include "maxmatch/graph.hpp"
#include "oracle_support.hpp"

using namespace maxmatch;

TEST_CASE("vizing_coloring stays within delta+1 and is proper") {
    CHECK_THROWS_AS(vizing_coloring(Graph(3)), std::invalid_argument);

    auto check = [](const Graph& g) {
        EdgeColoring c = vizing_coloring(g);
        CHECK(is_proper(g, c));
        CHECK(c.colors <= g.max_degree() + 1);
    };
    check(complete_graph(4));
    check(cycle_graph(7));
    check(petersen_graph());

    SUBCASE("star needs exactly its degree") {
        EdgeColoring c = vizing_coloring(star_graph(5));
        CHECK(c.colors == 5);
    }

    SUBCASE("every graph up to 7 vertices") {
        for (int n = 2; n <= 7; ++n)
            enumerate_graphs(n, {}, [&](const Graph& g) {
                if (g.edge_count() == 0) return;
                EdgeColoring c = vizing_coloring(g);
                CHECK(is_proper(g, c));
                CHECK(c.colors <= g.max_degree() + 1);
            });
    }
}

TEST_CASE("chromatic_index exact values") {
    CHECK_THROWS_AS(chromatic_index(Graph(2)), std::invalid_argument);

    auto r3 = chromatic_index(complete_graph(3));
    CHECK(r3.chi == 3);
    CHECK(r3.vclass == VizingClass::II);

    auto r4 = chromatic_index(complete_graph(4));
    CHECK(r4.chi == 3);
    CHECK(r4.vclass == VizingClass::I);

    auto rp = chromatic_index(petersen_graph());
    CHECK(rp.chi == 4);
    CHECK(rp.vclass == VizingClass::II);

    SUBCASE("witness is proper and uses chi colors") {
        for (const Graph& g : {complete_graph(5), cycle_graph(6), petersen_graph()}) {
            auto r = chromatic_index(g);
            CHECK(is_proper(g, r.witness));
            CHECK(r.witness.colors == r.chi);
        }
    }

    SUBCASE("vizing bounds hold") {
        for (int n = 2; n <= 6; ++n)
            enumerate_graphs(n, {}, [&](const Graph& g) {
                if (g.edge_count() == 0) return;
                auto r = chromatic_index(g);
                CHECK(r.chi >= g.max_degree());
                CHECK(r.chi <= g.max_degree() + 1);
                CHECK((r.vclass == VizingClass::I) == (r.chi == g.max_degree()));
            });
    }
}

TEST_CASE("oracle equivalence on graphs with few edges") {
    long long checked = 0;
    for (int n = 2; n <= 7; ++n)
        enumerate_graphs(n, {}, [&](const Graph& g) {
            if (g.edge_count() == 0 || g.edge_count() > 10) return;
            CHECK(chromatic_index(g).chi == testoracle::brute_chi(g));
            ++checked;
        });
    CHECK(checked > 900);
}

TEST_CASE("color class machinery") {
    SUBCASE("K3 classes are singletons") {
        auto r = chromatic_index(complete_graph(3));
        CHECK(color_class_sizes(r.witness) == std::vector<int>{1, 1, 1});
    }
    SUBCASE("optimal C6 coloring splits evenly") {
        auto r = chromatic_index(cycle_graph(6));
        CHECK(r.chi == 2);
        CHECK(color_class_sizes(r.witness) == std::vector<int>{3, 3});
    }
    SUBCASE("optimal K4 coloring is a one-factorization") {
        auto r = chromatic_index(complete_graph(4));
        CHECK(color_class_sizes(r.witness) == std::vector<int>{2, 2, 2});
    }
    SUBCASE("classes of a proper coloring are matchings") {
        Graph g = petersen_graph();
        auto r = chromatic_index(g);
        for (const Matching& cls : color_classes(g, r.witness)) CHECK(is_valid_matching(g, cls));
    }
}

TEST_CASE("search budget produces undecided, never a wrong answer") {
    CHECK_THROWS_AS(chromatic_index(petersen_graph(), 5), BudgetExceededError);
}
