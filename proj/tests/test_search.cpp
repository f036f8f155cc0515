#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "bounds.hpp"
#include "oracles.hpp"
#include "search.hpp"

using namespace pebblelab;

namespace {

bool prod_solvable(const Graph& g, const Distribution& d, MoveSystem sys) {
    return solvable(g, d, sys).solvable;
}

} // namespace

TEST_CASE("distribution enumeration covers every multiset exactly once") {
    Graph k2 = build_complete(2);
    DistributionEnumerator en(k2, 2, EnumerationFilters::none());
    std::vector<std::vector<int>> seen;
    Distribution d(2);
    while (en.next(d)) seen.push_back({d.count(0), d.count(1)});
    REQUIRE(seen.size() == 3);
    CHECK(seen[0] == std::vector<int>{2, 0}); // descending lexicographic start
    CHECK(en.raw_count() == 3);

    // raw multiset count is C(size + n - 1, size): n = 9, size = 4 -> C(12,4)
    Graph k3k3 = cartesian_product(build_complete(3), build_complete(3));
    DistributionEnumerator big(k3k3, 4, EnumerationFilters::none());
    std::set<std::string> keys;
    Distribution item(9);
    std::size_t produced = 0;
    while (big.next(item)) {
        ++produced;
        keys.insert(std::string(item.key()));
        CHECK(item.total() == 4);
    }
    CHECK(produced == 495);
    CHECK(keys.size() == produced); // no duplicates
    CHECK(big.raw_count() == 495);

    // same multisets as an independent recursive generator
    Graph p5 = build_path(5);
    std::set<std::vector<int>> ours, reference;
    DistributionEnumerator five(p5, 4, EnumerationFilters::none());
    Distribution out5(5);
    while (five.next(out5)) {
        std::vector<int> counts;
        for (int v = 0; v < 5; ++v) counts.push_back(out5.count(v));
        ours.insert(counts);
    }
    oracle::for_each_composition(5, 4, [&](const std::vector<int>& counts) {
        reference.insert(counts);
    });
    CHECK(ours == reference);

    // size 0 yields exactly the empty distribution, and the weight filter
    // rejects it on any nonempty graph
    DistributionEnumerator zero(k2, 0, EnumerationFilters::none());
    Distribution empty(2);
    CHECK(zero.next(empty));
    CHECK(empty.total() == 0);
    CHECK_FALSE(zero.next(empty));
    DistributionEnumerator zerof(k2, 0, EnumerationFilters{true, false});
    CHECK_FALSE(zerof.next(empty));
}

TEST_CASE("filters never discard a solvable distribution") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 4 + trial % 3);
        for (MoveSystem sys : {MoveSystem::pebbling_only, MoveSystem::rubbling}) {
            for (int size = 1; size <= 4; ++size) {
                EnumerationFilters filters = EnumerationFilters::for_system(sys);
                std::set<std::string> kept;
                DistributionEnumerator with(g, size, filters);
                Distribution d(g.vertex_count());
                while (with.next(d)) kept.insert(std::string(d.key()));

                DistributionEnumerator all(g, size, EnumerationFilters::none());
                while (all.next(d)) {
                    if (kept.count(std::string(d.key()))) continue;
                    // filtered out: must be unsolvable
                    CHECK_FALSE(prod_solvable(g, d, sys));
                }
            }
        }
    }
}

TEST_CASE("optimal numbers on the smallest graphs") {
    CHECK(optimal_number(build_complete(1), MoveSystem::pebbling_only).value == 1);
    CHECK(optimal_number(build_complete(2), MoveSystem::pebbling_only).value == 2);
    CHECK(optimal_number(build_complete(2), MoveSystem::rubbling).value == 2);
}

TEST_CASE("optimal pebbling of P5 with a fully naive cross-check") {
    Graph p5 = build_path(5);
    OptimumCertificate cert = optimal_number(p5, MoveSystem::pebbling_only);
    CHECK(cert.value == 4);
    // independent of memoization and of the production solver entirely
    int naive = oracle::brute_optimal(p5, MoveSystem::pebbling_only,
                                      [](const Graph& g, const Distribution& d, MoveSystem sys) {
                                          return oracle::naive_solvable(g, d, sys);
                                      });
    CHECK(naive == 4);

    OptimumCertificate rub = optimal_number(p5, MoveSystem::rubbling);
    CHECK(rub.value == 3);
    int naive_rub = oracle::brute_optimal(p5, MoveSystem::rubbling,
                                          [](const Graph& g, const Distribution& d, MoveSystem sys) {
                                              return oracle::naive_solvable(g, d, sys);
                                          });
    CHECK(naive_rub == 3);
}

TEST_CASE("certificates replay and carry consistent evidence") {
    Graph k3k3 = cartesian_product(build_complete(3), build_complete(3));
    OptimumCertificate cert = optimal_number(k3k3, MoveSystem::pebbling_only);
    CHECK(cert.value == 4);
    CHECK(cert.witness.total() == 4);
    CHECK(solvable(k3k3, cert.witness, MoveSystem::pebbling_only).solvable);
    REQUIRE(cert.witness_solutions.size() == 9);
    for (int v = 0; v < 9; ++v) {
        CHECK(replay_witness(k3k3, cert.witness, cert.witness_solutions[static_cast<std::size_t>(v)].witness,
                             v, MoveSystem::pebbling_only));
    }

    // audit mode reaches the same value by full enumeration
    SearchOptions audit;
    audit.filters = false;
    audit.theorem_bounds = false;
    OptimumCertificate audited = optimal_number(k3k3, MoveSystem::pebbling_only, audit);
    CHECK(audited.value == 4);
    CHECK(audited.evidence == EvidenceKind::exhausted_all_smaller);
    CHECK(audited.enumerated_from == 1);

    // the rubbling optimum of K4 x K4 is certified by a theorem bound alone
    Graph k4k4 = cartesian_product(build_complete(4), build_complete(4));
    OptimumCertificate viaTheorem = optimal_number(k4k4, MoveSystem::rubbling);
    CHECK(viaTheorem.value == 4);
    CHECK(viaTheorem.evidence == EvidenceKind::theorem_bound);
    REQUIRE(viaTheorem.theorem.has_value());
    CHECK(viaTheorem.theorem->value == 4);
}

TEST_CASE("optimal pebbling of K3 x K3 x K5 is 6: theorem floor meets a found witness") {
    Graph prod = cartesian_product(cartesian_product(build_complete(3), build_complete(3)),
                                   build_complete(5));
    OptimumCertificate cert = optimal_number(prod, MoveSystem::pebbling_only);
    CHECK(cert.value == 6);
    CHECK(cert.evidence == EvidenceKind::theorem_bound);
    REQUIRE(cert.theorem.has_value());
    CHECK(cert.theorem->name == "thm6_pebbling_lb");
    CHECK(cert.theorem->k == 3);
    CHECK(cert.witness.total() == 6);
    CHECK(solvable(prod, cert.witness, MoveSystem::pebbling_only).solvable);

    // rubbling needs one pebble fewer here; sizes up to 4 are exhausted
    // above the thm3 floor (value pinned from an unfiltered audit run)
    OptimumCertificate rub = optimal_number(prod, MoveSystem::rubbling);
    CHECK(rub.value == 5);
    CHECK(rub.evidence == EvidenceKind::exhausted_all_smaller);
    CHECK(solvable(prod, rub.witness, MoveSystem::rubbling).solvable);
    CHECK(rub.value <= cert.value);
}

TEST_CASE("budget exhaustion reports a bracket") {
    Graph p5 = build_path(5);
    SearchOptions opts;
    opts.budget = 3;
    opts.theorem_bounds = false;
    opts.seed_upper_bound = false;
    try {
        optimal_number(p5, MoveSystem::pebbling_only, opts);
        FAIL("expected InconclusiveError");
    } catch (const InconclusiveError& e) {
        CHECK(e.lower_bound() >= 1);
        CHECK(e.queries_used() >= 3);
        CHECK_FALSE(e.upper_bound().has_value());
    }
}

TEST_CASE("rubbling never needs more pebbles than pebbling") {
    std::mt19937 rng(910);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracle::random_connected_graph(rng, 4 + trial % 3);
        OptimumCertificate pi = optimal_number(g, MoveSystem::pebbling_only);
        OptimumCertificate rho = optimal_number(g, MoveSystem::rubbling);
        CHECK(rho.value <= pi.value);
        CHECK(pi.value <= diameter_upper_bound(g));

        // lower-bound evidence is re-checkable: one size below the optimum,
        // unfiltered enumeration finds nothing solvable
        for (auto [sys, value] : {std::pair{MoveSystem::pebbling_only, pi.value},
                                  std::pair{MoveSystem::rubbling, rho.value}}) {
            if (value <= 1) continue;
            DistributionEnumerator en(g, value - 1, EnumerationFilters::none());
            Distribution cand(g.vertex_count());
            while (en.next(cand)) CHECK_FALSE(prod_solvable(g, cand, sys));
        }
    }
}

TEST_CASE("lift through a product") {
    Graph k3 = build_complete(3);
    Distribution two(3);
    two.set_count(0, 2); // 2^diam on one vertex of K3

    LiftResult lifted = lift_through_product(k3, two, 4, MoveSystem::pebbling_only);
    CHECK(lifted.product.vertex_count() == 12);
    CHECK(lifted.dist.total() == 4);
    CHECK(lifted.dist.count(0) == 4); // (v, 0) carries 2 * p(v)
    CHECK(solvable(lifted.product, lifted.dist, MoveSystem::pebbling_only).solvable);

    // pi_opt(K3 x K3) = 4 <= 2 * pi_opt(K3)
    OptimumCertificate base = optimal_number(k3, MoveSystem::pebbling_only);
    CHECK(base.value == 2);
    LiftResult step = lift_through_product(k3, base.witness, 3, MoveSystem::pebbling_only);
    CHECK(optimal_number(step.product, MoveSystem::pebbling_only).value <= 2 * base.value);

    // unsolvable inputs are rejected
    Distribution one(3);
    one.set_count(0, 1);
    CHECK_THROWS_AS(lift_through_product(k3, one, 3, MoveSystem::pebbling_only),
                    ValidationError);
}

TEST_CASE("lifts of random solvable distributions stay solvable") {
    std::mt19937 rng(321);
    int tested = 0;
    while (tested < 12) {
        Graph g = oracle::random_connected_graph(rng, 4 + tested % 3);
        Distribution d = oracle::random_distribution(rng, g.vertex_count(), 2 + tested % 4);
        MoveSystem sys = tested % 2 ? MoveSystem::rubbling : MoveSystem::pebbling_only;
        if (!prod_solvable(g, d, sys)) continue;
        for (int n : {2, 3}) {
            LiftResult lifted = lift_through_product(g, d, n, sys);
            CHECK(prod_solvable(lifted.product, lifted.dist, sys));
        }
        ++tested;
    }
}
