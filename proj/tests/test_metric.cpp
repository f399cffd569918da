#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <turanlab/turanlab.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace turanlab;

TEST_CASE("symmetric differences", "[metric]") {
    auto fano = fixtures::fano();
    REQUIRE(symmetric_difference_count(fano, fano) == 0);

    auto edges = fano.edges();
    edges.pop_back();
    Hypergraph minus_one(3, 7, std::move(edges));
    REQUIRE(symmetric_difference_count(fano, minus_one) == 1);

    REQUIRE(symmetric_difference_count(fixtures::t3(), Hypergraph::empty(3, 5)) == 3);

    REQUIRE_THROWS_AS(symmetric_difference_count(fano, fixtures::t3()), DimensionMismatch);
}

TEST_CASE("exact distance to blowups on documented cases", "[metric]") {
    auto fano = fixtures::fano();

    // any blowup is at distance zero
    auto spec = BlowupSpec::from_part_sizes(fano, {2, 1, 1, 1, 1, 1, 0});
    auto g = blow_up(spec);
    auto res = distance_to_blowups(g, fano, {});
    REQUIRE(res.value == 0);
    REQUIRE(res.exact);

    // Fano minus a block is one edit away (7^7 assignments, enumerable)
    auto edges = fano.edges();
    edges.pop_back();
    Hypergraph minus_one(3, 7, std::move(edges));
    auto res1 = distance_to_blowups(minus_one, fano, {});
    REQUIRE(res1.value == 1);
    REQUIRE(res1.exact);
    REQUIRE(res1.witness);
    REQUIRE(symmetric_difference_count(minus_one, blow_up(*res1.witness)) == 1);

    // single 3-edge maps onto a line with all other parts empty
    auto res0 = distance_to_blowups(fixtures::single_edge(3), fano, {});
    REQUIRE(res0.value == 0);
}

TEST_CASE("exact distance agrees with unpruned enumeration", "[metric]") {
    std::mt19937_64 rng(246);
    for (int trial = 0; trial < 25; ++trial) {
        auto base = trial % 2 ? fixtures::complete_graph(3) : fixtures::p3();
        const int n = 4 + static_cast<int>(rng() % 3);
        auto g = oracles::random_graph(rng, n, 2, 45);
        auto res = distance_to_blowups(g, base, {});
        CAPTURE(trial, n, g.edge_count());
        REQUIRE(res.exact);
        REQUIRE(res.value == oracles::brute_distance_to_blowups(g, base));
        REQUIRE(res.witness);
        REQUIRE(symmetric_difference_count(g, blow_up(*res.witness)) == res.value);
    }
}

TEST_CASE("heuristic distance is an upper bound with a valid witness", "[metric]") {
    std::mt19937_64 rng(135);
    for (int trial = 0; trial < 25; ++trial) {
        auto base = fixtures::complete_graph(3);
        const int n = 5 + static_cast<int>(rng() % 4);
        auto g = oracles::random_graph(rng, n, 2, 45);
        DistanceOptions heuristic;
        heuristic.mode = DistanceMode::Heuristic;
        heuristic.seed = trial;
        auto upper = distance_to_blowups(g, base, heuristic);
        REQUIRE_FALSE(upper.exact);
        REQUIRE(upper.witness);
        REQUIRE(symmetric_difference_count(g, blow_up(*upper.witness)) == upper.value);
        auto exact = distance_to_blowups(g, base, {});
        CAPTURE(trial, n);
        REQUIRE(upper.value >= exact.value);
    }
}

TEST_CASE("exact mode enforces the enumeration budget", "[metric]") {
    auto fano = fixtures::fano();
    auto spec = BlowupSpec::from_part_sizes(fano, std::vector<int>(7, 2));
    auto big = blow_up(spec); // 7^14 assignments: far beyond the default budget
    REQUIRE_THROWS_AS(distance_to_blowups(big, fano, {}), BudgetExceeded);
    DistanceOptions heuristic;
    heuristic.mode = DistanceMode::Heuristic;
    auto res = distance_to_blowups(big, fano, heuristic);
    REQUIRE(res.value == 0); // descent finds the exact blowup structure
}

TEST_CASE("weighted distance witness on documented cases", "[metric]") {
    auto fano = fixtures::fano();
    std::vector<Rational> xi7(7, Rational(1, 7));
    RationalWeightedHypergraph w1(fano, xi7);

    // identical weighted graphs, identity specs -> 0
    auto d0 = weighted_distance_witness(w1, w1, BlowupSpec::identity(fano),
                                        BlowupSpec::identity(fano));
    REQUIRE(d0 == Rational(0));

    // (Fano, xi) vs (Fano minus a block, xi): one triple of weight (1/7)^3
    auto edges = fano.edges();
    edges.pop_back();
    Hypergraph minus_one(3, 7, std::move(edges));
    RationalWeightedHypergraph w2(minus_one, xi7);
    auto d1 = weighted_distance_witness(w1, w2, BlowupSpec::identity(fano),
                                        BlowupSpec::identity(minus_one));
    REQUIRE(d1 == Rational(1, 343));
    REQUIRE(d1 >= Rational(0));
}

TEST_CASE("weighted distance witness validates weights", "[metric]") {
    auto k3 = fixtures::complete_graph(3);
    RationalWeightedHypergraph w1(k3, {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
    RationalWeightedHypergraph w2(k3, {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    // derived common mu from w1 cannot satisfy w2's part sums
    REQUIRE_THROWS_AS(weighted_distance_witness(w1, w2, BlowupSpec::identity(k3),
                                                BlowupSpec::identity(k3)),
                      InconsistentWeights);
    // blowing up vertex 0 into two halves reconciles with an explicit mu
    BlowupSpec doubled(k3, {0, 0, 1, 2});
    BlowupSpec other(k3, {0, 1, 1, 2}); // vertex 1 doubled instead
    RationalWeightedHypergraph w3(k3, {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
    RationalWeightedHypergraph w4(k3, {Rational(1, 4), Rational(1, 2), Rational(1, 4)});
    std::vector<Rational> common = {Rational(1, 4), Rational(1, 4), Rational(1, 4),
                                    Rational(1, 4)};
    auto d = weighted_distance_witness(w3, w4, doubled, other, common);
    REQUIRE(d >= Rational(0));
}

TEST_CASE("distance transfer inequality on documented cases", "[metric]") {
    // r=2: F = C5, base = K2 (n = 5 > r^2 = 4)
    auto rep = check_distance_transfer(fixtures::cycle(5), fixtures::complete_graph(2), {});
    REQUIRE(rep.pass);
    REQUIRE(rep.lhs >= 1); // C5 is odd, no blowup of K2 contains it

    // blowups pass with LHS zero
    auto base = fixtures::complete_graph(2);
    auto spec = BlowupSpec::from_part_sizes(base, {3, 3});
    auto rep0 = check_distance_transfer(blow_up(spec), base, {});
    REQUIRE(rep0.pass);
    REQUIRE(rep0.lhs == 0);

    // n <= r^2 is rejected
    REQUIRE_THROWS_AS(check_distance_transfer(fixtures::complete_graph(4),
                                              fixtures::complete_graph(2), {}),
                      InvalidArgument);
}

TEST_CASE("distance transfer inequality on random 2-graphs", "[metric]") {
    std::mt19937_64 rng(7777);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 4);
        auto base = trial % 2 ? fixtures::complete_graph(2) : fixtures::complete_graph(3);
        auto g = oracles::random_graph(rng, n, 2, 50);
        auto rep = check_distance_transfer(g, base, {});
        CAPTURE(trial, n, rep.lhs);
        REQUIRE(rep.pass);
    }
}

TEST_CASE("weighted distance satisfies the triangle bound on witnesses", "[metric]") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        const int r = 2 + static_cast<int>(rng() % 2);
        auto f1 = oracles::random_graph(rng, n, r, 40);
        auto f2 = oracles::random_graph(rng, n, r, 40);
        auto f3 = oracles::random_graph(rng, n, r, 40);
        // shared rational weights
        std::vector<Rational> mu(static_cast<std::size_t>(n));
        BigInt total = 0;
        std::vector<BigInt> parts(static_cast<std::size_t>(n));
        for (auto& p : parts) { p = 1 + rng() % 9; total += p; }
        for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = Rational(parts[i], total);
        auto dprime = [&](const Hypergraph& a, const Hypergraph& b) {
            RationalWeightedHypergraph wa(a, mu), wb(b, mu);
            return weighted_distance_witness(wa, wb, BlowupSpec::identity(a),
                                             BlowupSpec::identity(b), mu);
        };
        CAPTURE(trial, n, r);
        REQUIRE(dprime(f1, f3) <= dprime(f1, f2) + dprime(f2, f3));
    }
}

TEST_CASE("distance error paths", "[metric]") {
    REQUIRE_THROWS_AS(distance_to_blowups(fixtures::t3(), fixtures::complete_graph(3), {}),
                      DimensionMismatch); // r mismatch
    REQUIRE_THROWS_AS(BlowupSpec(fixtures::fano(), {0, 1, 9}), InvalidAssignment);
}

TEST_CASE("zero distance iff recoverable for pair-covering bases", "[metric]") {
    std::mt19937_64 rng(864);
    for (int trial = 0; trial < 20; ++trial) {
        auto base = fixtures::complete_graph(3);
        const int n = 4 + static_cast<int>(rng() % 3);
        auto g = oracles::random_graph(rng, n, 2, 40);
        const bool recoverable = recover_partition(g, base).has_value();
        auto res = distance_to_blowups(g, base, {});
        CAPTURE(trial, n);
        REQUIRE((res.value == 0) == recoverable);
    }
}
