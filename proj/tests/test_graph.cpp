#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "graph.hpp"
#include "oracles.hpp"

using namespace pebblelab;

TEST_CASE("complete graphs") {
    Graph k1 = build_complete(1);
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);
    CHECK(k1.diameter() == 0);

    Graph k3 = build_complete(3);
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.diameter() == 1);

    Graph k5 = build_complete(5);
    CHECK(k5.edge_count() == 10); // 5*4/2 by direct count
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            CHECK(k5.distance(u, v) == (u == v ? 0 : 1));

    CHECK_THROWS_AS(build_complete(0), ValidationError);
}

TEST_CASE("paths and cycles") {
    Graph p2 = build_path(2);
    CHECK(p2.edge_count() == 1);
    CHECK(p2.diameter() == 1);

    Graph p5 = build_path(5);
    CHECK(p5.diameter() == 4);
    CHECK(p5.distance(0, 4) == 4);

    Graph c6 = build_cycle(6);
    CHECK(c6.edge_count() == 6);
    // BFS oracle agrees
    auto adj = oracle::adjacency_lists(c6);
    int ecc = 0;
    for (int d : oracle::bfs_distances(adj, 0)) ecc = std::max(ecc, d);
    CHECK(ecc == 3);
    CHECK(c6.diameter() == 3);

    CHECK_THROWS_AS(build_path(0), ValidationError);
    CHECK_THROWS_AS(build_cycle(2), ValidationError);
}

TEST_CASE("cartesian product structure") {
    Graph k3 = build_complete(3);
    Graph prod = cartesian_product(k3, k3);
    CHECK(prod.vertex_count() == 9);
    CHECK(prod.edge_count() == 18); // 3*3 + 3*3 counted directly
    CHECK(prod.diameter() == 2);
    CHECK(prod.label(0) == "(0,0)");
    CHECK(prod.label(5) == "(1,2)");

    // product with K1 is the original graph up to relabeling
    Graph p4 = build_path(4);
    Graph same = cartesian_product(p4, build_complete(1));
    REQUIRE(same.vertex_count() == p4.vertex_count());
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            CHECK(same.adjacent(u, v) == p4.adjacent(u, v));

    Graph triple = cartesian_product(prod, build_complete(5));
    CHECK(triple.vertex_count() == 45);
    CHECK(triple.diameter() == 3);
    CHECK(triple.label(0) == "(0,0,0)"); // flat left-associative tuples
}

TEST_CASE("product distance additivity, exhaustively on small factors") {
    Graph g = build_path(3);
    Graph h = build_cycle(5);
    Graph prod = cartesian_product(g, h);
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = 0; b < h.vertex_count(); ++b)
            for (int a2 = 0; a2 < g.vertex_count(); ++a2)
                for (int b2 = 0; b2 < h.vertex_count(); ++b2) {
                    int pu = a * h.vertex_count() + b;
                    int pv = a2 * h.vertex_count() + b2;
                    CHECK(prod.distance(pu, pv) == g.distance(a, a2) + h.distance(b, b2));
                }
}

TEST_CASE("hamming graphs") {
    // words over a 3-letter alphabet of length 2: adjacency must coincide
    // with K3 x K3 under the shared base-3 vertex indexing
    Graph h32 = build_hamming(3, 2);
    Graph prod = cartesian_product(build_complete(3), build_complete(3));
    REQUIRE(h32.vertex_count() == prod.vertex_count());
    for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v)
            CHECK(h32.adjacent(u, v) == prod.adjacent(u, v));
    CHECK(h32.label(0) == "aa");
    CHECK(h32.label(5) == "bc");

    Graph cube = build_hamming(2, 3);
    CHECK(cube.vertex_count() == 8);
    for (int v = 0; v < 8; ++v) CHECK(cube.degree(v) == 3);

    for (int m = 2; m <= 5; ++m)
        for (int k = 1; k <= 3; ++k)
            CHECK(build_hamming(m, k).diameter() == k);

    CHECK(build_hamming(1, 5).vertex_count() == 1);
    CHECK_THROWS_AS(build_hamming(10, 4), SizeBudgetError);
    CHECK_THROWS_AS(build_hamming(0, 2), ValidationError);
}

TEST_CASE("hamming graph matches iterated product invariants") {
    const std::pair<int, int> cases[] = {{2, 3}, {2, 6}, {4, 2}, {4, 3}, {3, 3}};
    for (auto [m, k] : cases) {
        Graph h = build_hamming(m, k);
        Graph p = build_complete(m);
        for (int i = 1; i < k; ++i) p = cartesian_product(p, build_complete(m));
        REQUIRE(h.vertex_count() == p.vertex_count());

        auto degree_sequence = [](const Graph& g) {
            std::vector<int> d;
            for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
            std::sort(d.begin(), d.end());
            return d;
        };
        CHECK(degree_sequence(h) == degree_sequence(p));
        for (int v = 0; v < h.vertex_count(); ++v)
            CHECK(h.degree(v) == k * (m - 1));

        auto distance_histogram = [](const Graph& g) {
            std::map<int, int> hist;
            for (int u = 0; u < g.vertex_count(); ++u)
                for (int v = 0; v < g.vertex_count(); ++v) hist[g.distance(u, v)] += 1;
            return hist;
        };
        CHECK(distance_histogram(h) == distance_histogram(p));
    }
}

TEST_CASE("neighborhoods") {
    Graph p3 = build_path(3);
    VertexSet all = p3.full_set();
    CHECK(closed_neighborhood(p3, all) == all);
    CHECK(open_neighborhood(p3, all).empty());

    VertexSet center(3);
    center.set(1);
    CHECK(closed_neighborhood(p3, center).count() == 3);
    VertexSet open = open_neighborhood(p3, center);
    CHECK(open.count() == 2);
    CHECK(open.test(0));
    CHECK(open.test(2));

    Graph k3k3 = cartesian_product(build_complete(3), build_complete(3));
    VertexSet one(9);
    one.set(0);
    CHECK(closed_neighborhood(k3k3, one).count() == 5); // degree 4 plus itself
}

TEST_CASE("graph validation") {
    CHECK_THROWS_WITH_AS(Graph(3, {{0, 0}}), doctest::Contains("non-simple"), ValidationError);
    CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {1, 0}}), doctest::Contains("non-simple"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(Graph(4, {{0, 1}, {2, 3}}), doctest::Contains("disconnected"),
                         ValidationError);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), ValidationError);
    CHECK_THROWS_AS(Graph(0, {}), ValidationError);
    CHECK_THROWS_AS(build_complete(5000), SizeBudgetError);
    CHECK_THROWS_AS(build_path(5000), SizeBudgetError);
    CHECK(build_path(5000, 8192).vertex_count() == 5000);
}

TEST_CASE("distance table agrees with adjacency and an independent BFS") {
    std::mt19937 rng(991);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 4 + trial % 6);
        auto adj = oracle::adjacency_lists(g);
        for (int u = 0; u < g.vertex_count(); ++u) {
            auto dist = oracle::bfs_distances(adj, u);
            for (int v = 0; v < g.vertex_count(); ++v) {
                CHECK(g.distance(u, v) == dist[static_cast<std::size_t>(v)]);
                CHECK(g.adjacent(u, v) == (g.distance(u, v) == 1));
            }
        }
    }
}

TEST_CASE("eccentricity, radius, center") {
    Graph p5 = build_path(5);
    CHECK(p5.eccentricity(0) == 4);
    CHECK(p5.eccentricity(2) == 2);
    CHECK(p5.radius() == 2);
    CHECK(p5.center_vertex() == 2);
}
