#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "text_io.hpp"

using namespace pebblelab;

TEST_CASE("explicit graph form") {
    Graph g = load_graph("graph 3\nedge 0 1\nedge 1 2\nedge 2 0\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.diameter() == 1);

    // comments and labels
    Graph labeled = load_graph("# a triangle\ngraph 3\nlabel 0 first vertex\nedge 0 1\nedge 1 2\nedge 0 2\n");
    CHECK(labeled.label(0) == "first vertex");
    CHECK(labeled.label(1) == "1");
}

TEST_CASE("rejected inputs carry named errors and line numbers") {
    CHECK_THROWS_WITH_AS(load_graph("graph 2\nedge 0 0\n"), doctest::Contains("non-simple"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(load_graph("graph 4\nedge 0 1\nedge 2 3\n"),
                         doctest::Contains("disconnected"), ValidationError);
    CHECK_THROWS_WITH_AS(load_graph("graph 2\nedge 0 two\n"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_AS(load_graph(""), ParseError);
    CHECK_THROWS_AS(load_graph("graph 2\nvertex 0\n"), ParseError);
    CHECK_THROWS_AS(load_graph("graph 9999\n"), SizeBudgetError);
}

TEST_CASE("family form") {
    CHECK(load_graph("family complete 4\n").edge_count() == 6);
    CHECK(load_graph("family hamming 3 2\n").vertex_count() == 9);
    CHECK(load_graph("family cycle 6\n").diameter() == 3);

    Graph prod = load_graph("family product complete 3 complete 3 complete 5\n");
    CHECK(prod.vertex_count() == 45);
    CHECK(prod.diameter() == 3);

    CHECK_THROWS_WITH_AS(load_graph("family torus 3\n"), doctest::Contains("torus"), ParseError);
    CHECK_THROWS_AS(load_graph("family complete 3 7\n"), ParseError);
    CHECK_THROWS_AS(load_graph("family complete\n"), ParseError);
    CHECK_THROWS_AS(load_graph("family hamming 3 2\nedge 0 1\n"), ParseError);
}

TEST_CASE("malformed inputs always raise typed errors") {
    const char* bad_graphs[] = {
        "",
        "\n\n# only comments\n",
        "graph\n",
        "graph -3\n",
        "graph 2 extra\n",
        "graph 2\nedge 0\n",
        "graph 2\nedge 0 1 2\n",
        "graph 2\nedge 0 1\nedge 0 1\n",
        "graph 2\nedge -1 0\n",
        "graph 2\nlabel 5 x\n",
        "graph 2\nlabel x y\n",
        "family\n",
        "family product\n",
        "family product complete\n",
        "family hamming 3\n",
        "family cycle two\n",
        "family complete 0\n",
        "edge 0 1\n",
        "graph 99999999\n",
    };
    for (const char* text : bad_graphs) {
        CAPTURE(text);
        CHECK_THROWS_AS(load_graph(text), Error);
    }

    Graph p3 = build_path(3);
    const char* bad_dists[] = {
        "",
        "dist\n",
        "dist x\n",
        "dist 3 extra\n",
        "dist 3\npebbles\n",
        "dist 3\npebbles 0\n",
        "dist 3\npebbles 0 1 2\n",
        "dist 3\nother 0 1\n",
        "{",
        "{\"counts\": [1,1,1]}",
        "{\"n\": 3, \"counts\": [1]}",
        "{\"n\": 3, \"counts\": \"no\"}",
    };
    for (const char* text : bad_dists) {
        CAPTURE(text);
        CHECK_THROWS_AS(load_distribution(text, p3), Error);
    }
}

TEST_CASE("save/load round trip preserves adjacency and labels") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = trial == 0 ? build_hamming(3, 2)
                             : oracle::random_connected_graph(rng, 4 + trial);
        Graph back = load_graph(save_graph(g));
        REQUIRE(back.vertex_count() == g.vertex_count());
        for (int u = 0; u < g.vertex_count(); ++u) {
            CHECK(back.label(u) == g.label(u));
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(back.adjacent(u, v) == g.adjacent(u, v));
        }
    }
}

TEST_CASE("distribution text and JSON forms") {
    Graph p5 = build_path(5);
    Distribution d = load_distribution("dist 5\npebbles 0 2\npebbles 3 1\n", p5);
    CHECK(d.total() == 3);
    CHECK(d.count(0) == 2);
    CHECK(d.count(3) == 1);

    Distribution j = load_distribution(R"({"n": 5, "counts": [2, 0, 0, 1, 0]})", p5);
    CHECK(j == d);

    Distribution back = load_distribution(save_distribution(d), p5);
    CHECK(back == d);

    CHECK_THROWS_AS(load_distribution("dist 4\n", p5), ValidationError); // size mismatch
    CHECK_THROWS_WITH_AS(load_distribution("dist 5\npebbles 1 1\npebbles 1 2\n", p5),
                         doctest::Contains("duplicate"), ParseError);
    CHECK_THROWS_AS(load_distribution("dist 5\npebbles 9 1\n", p5), ParseError);
    CHECK_THROWS_AS(load_distribution("dist 5\npebbles 0 -1\n", p5), ParseError);
    CHECK_THROWS_AS(load_distribution("dist 5\npebbles 0 900\n", p5), SizeBudgetError);
    CHECK_THROWS_AS(load_distribution(R"({"n": 5})", p5), ParseError);
}
