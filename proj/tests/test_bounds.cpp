#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bounds.hpp"
#include "json_io.hpp"
#include "oracles.hpp"
#include "reachability.hpp"

using namespace pebblelab;

namespace {

Graph k3k3k5() {
    return cartesian_product(cartesian_product(build_complete(3), build_complete(3)),
                             build_complete(5));
}

int brute_rho(const Graph& g) {
    return oracle::brute_optimal(g, MoveSystem::rubbling,
                                 [](const Graph& gg, const Distribution& d, MoveSystem sys) {
                                     return solvable(gg, d, sys).solvable;
                                 });
}

int brute_pi(const Graph& g) {
    return oracle::brute_optimal(g, MoveSystem::pebbling_only,
                                 [](const Graph& gg, const Distribution& d, MoveSystem sys) {
                                     return solvable(gg, d, sys).solvable;
                                 });
}

} // namespace

TEST_CASE("diameter upper bound") {
    CHECK(diameter_upper_bound(build_complete(4)) == 2);
    CHECK(diameter_upper_bound(build_path(5)) == 16);
    CHECK(diameter_upper_bound(k3k3k5()) == 8);
}

TEST_CASE("thm3 lower bound") {
    Graph k4k4 = cartesian_product(build_complete(4), build_complete(4));
    CHECK(thm3_lower_bound(k4k4, 2) == 4); // min(gamma_1 = 4, 2^2)

    // gamma_1 of a complete graph is 1, so the bound degenerates to 1
    CHECK(thm3_lower_bound(build_complete(5), 2) == 1);

    CHECK_THROWS_AS(thm3_lower_bound(k4k4, 1), ValidationError);
}

TEST_CASE("thm5 rubbling lower bound") {
    // complete graphs: min(4, max(ceil(1/2) + 1, 1), m) = 2 for m >= 2,
    // and the brute-force optimum is 2 as well
    for (int m : {3, 4, 5}) {
        Graph km = build_complete(m);
        CHECK(thm5_rubbling_lower_bound(km, 2) == 2);
        CHECK(brute_rho(km) == 2);
    }
    // K1: the gamma_{k-2} arm caps the bound at 1
    CHECK(thm5_rubbling_lower_bound(build_complete(1), 2) == 1);

    Graph k4k4 = cartesian_product(build_complete(4), build_complete(4));
    CHECK(thm5_rubbling_lower_bound(k4k4, 2) == 4); // min(4, max(2+1, 4), 16)

    // both gamma terms large: the 2^k arm wins (gamma_1(P16) = 6, gamma_0 = 16)
    Graph p16 = build_path(16);
    CHECK(thm5_rubbling_lower_bound(p16, 2) == 4);
    CHECK(thm3_lower_bound(p16, 2) == 4);

    CHECK_THROWS_AS(thm5_rubbling_lower_bound(k4k4, 1), ValidationError);
}

TEST_CASE("mid and thm6 pebbling lower bounds") {
    Graph prod = k3k3k5();
    CHECK(thm4_mid_lower_bound(prod, 3) == 5);      // min(8, 3+2, gamma_1+1)
    CHECK(thm6_pebbling_lower_bound(prod, 3) == 6); // min(8, 3+2+1, gamma_1+1)

    // gamma_{k-2} = 1 caps thm6 via its third argument
    Graph k3 = build_complete(3);
    CHECK(thm6_pebbling_lower_bound(k3, 3) <= 2);

    CHECK_THROWS_AS(thm6_pebbling_lower_bound(prod, 2), ValidationError);
    CHECK_THROWS_AS(thm4_mid_lower_bound(prod, 2), ValidationError);
    CHECK_THROWS_AS(thm6_pebbling_lower_bound(build_complete(1), 3), ValidationError);
}

TEST_CASE("best bounds report") {
    Graph prod = k3k3k5();
    BoundReport report = best_bounds(prod, 2, 3);
    CHECK(report.diameter == 3);
    CHECK(report.diameter_ub == 8);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.best_pebbling.value == 6);
    CHECK(report.best_pebbling.k == 3);
    CHECK(report.best_rubbling.value == 4);
    CHECK(report.best_rubbling.k == 2);
    CHECK(report.best_rubbling.value <= report.best_pebbling.value);
    CHECK(report.best_pebbling.value <= report.diameter_ub);

    // rows are evaluated literally even where a theorem degenerates
    BoundReport k5_report = best_bounds(build_complete(5), 2, 2);
    REQUIRE(k5_report.rows.size() == 1);
    CHECK(*k5_report.rows[0].thm3_rubbling_lb == 1);
    CHECK(k5_report.rows[0].thm6_pebbling_lb == std::nullopt); // k < 3 everywhere

    // hamming(2^d, d) at k = d: the basic rubbling bound reaches 2^d
    BoundReport sigma = best_bounds(build_hamming(4, 2), 2, 2);
    CHECK(sigma.best_rubbling.value == 4);

    // byte-identical reports for identical inputs
    CHECK(bounds_to_json(best_bounds(prod, 2, 3)).dump(2) ==
          bounds_to_json(report).dump(2));

    CHECK_THROWS_AS(best_bounds(prod, 1, 3), ValidationError);
    CHECK_THROWS_AS(best_bounds(prod, 3, 2), ValidationError);
}

TEST_CASE("bounds sit below brute-force optima on random graphs") {
    std::mt19937 rng(140);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 4 + trial % 4);
        int rho = brute_rho(g);
        int pi = brute_pi(g);
        CHECK(rho <= pi);
        CHECK(pi <= diameter_upper_bound(g));
        GammaCache cache(g);
        for (int k = 2; k <= g.diameter() + 1; ++k) {
            std::int64_t t3 = thm3_lower_bound(g, k, &cache);
            std::int64_t t5 = thm5_rubbling_lower_bound(g, k, &cache);
            CHECK(t3 <= rho);
            CHECK(t5 <= rho);
            CHECK(t3 <= t5); // the refined bound never loses to the basic one
            if (k >= 3 && g.edge_count() > 0) {
                std::int64_t mid = thm4_mid_lower_bound(g, k, &cache);
                std::int64_t t6 = thm6_pebbling_lower_bound(g, k, &cache);
                CHECK(mid <= t6);
                CHECK(t6 <= pi);
            }
        }
    }
}
