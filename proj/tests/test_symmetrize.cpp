#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <turanlab/turanlab.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace turanlab;

TEST_CASE("find_uncovered_pair on documented cases", "[symmetrize]") {
    auto p3 = fixtures::p3();
    auto pair = find_uncovered_pair(p3, {0, 1, 2});
    REQUIRE(pair);
    REQUIRE(*pair == std::make_pair(0, 2)); // endpoints of the path

    auto fano = fixtures::fano();
    REQUIRE_FALSE(find_uncovered_pair(fano, {0, 1, 2, 3, 4, 5, 6}));

    auto single = fixtures::single_edge(3);
    REQUIRE_FALSE(find_uncovered_pair(single, {0, 1, 2}));
}

TEST_CASE("uncovered means uncovered within the induced subgraph", "[symmetrize]") {
    // vertices 0,1 share only the edge through 2; once 2 leaves the support
    // the pair becomes uncovered
    Hypergraph g(3, 4, {{0, 1, 2}});
    REQUIRE_FALSE(find_uncovered_pair(g, {0, 1, 2}));
    auto pair = find_uncovered_pair(g, {0, 1});
    REQUIRE(pair);
    REQUIRE(*pair == std::make_pair(0, 1));
}

TEST_CASE("symmetrize_step on the documented path examples", "[symmetrize]") {
    auto p3 = fixtures::p3();

    WeightedHypergraph uniform(p3, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    auto stepped = symmetrize_step(uniform, 0, 2);
    REQUIRE(lambda_eval(stepped) == Catch::Approx(2.0 / 9).margin(1e-15));
    REQUIRE(stepped.mu[2] == 0.0); // tie kept the lower-indexed vertex
    REQUIRE(stepped.mu[0] == Catch::Approx(2.0 / 3).margin(1e-15));

    WeightedHypergraph skewed(p3, {0.5, 0.3, 0.2});
    const double before = lambda_eval(skewed);
    REQUIRE(before == Catch::Approx(0.21).margin(1e-15));
    auto out = symmetrize_step(skewed, 0, 2);
    REQUIRE(lambda_eval(out) == Catch::Approx(0.21).margin(1e-15)); // both endpoints equal
    REQUIRE(lambda_eval(out) >= before - 1e-12);
}

TEST_CASE("symmetrize_step rejects covered pairs", "[symmetrize]") {
    auto k3 = fixtures::complete_graph(3);
    WeightedHypergraph w(k3, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    REQUIRE_THROWS_AS(symmetrize_step(w, 0, 1), InvalidPair);

    // covered only through a zero-weight vertex: the shift is legal
    Hypergraph g(3, 4, {{0, 1, 2}});
    WeightedHypergraph zero_cover(g, {0.5, 0.5, 0.0, 0.0});
    REQUIRE_NOTHROW(symmetrize_step(zero_cover, 0, 1));
}

TEST_CASE("symmetrize on documented cases", "[symmetrize]") {
    // (Fano, uniform): already covers pairs, zero steps
    WeightedHypergraph fano_uniform(fixtures::fano(), std::vector<double>(7, 1.0 / 7));
    auto trace = symmetrize(fano_uniform);
    REQUIRE(trace.steps.empty());
    REQUIRE(trace.covers_pairs_on_support);
    REQUIRE(trace.final.mu == fano_uniform.mu);

    // (P3, uniform): one step, final support {0,1}, lambda 2/9
    WeightedHypergraph p3_uniform(fixtures::p3(), {1.0 / 3, 1.0 / 3, 1.0 / 3});
    auto tp = symmetrize(p3_uniform);
    REQUIRE(tp.steps.size() == 1);
    REQUIRE(tp.final_support == std::vector<Vertex>{0, 1});
    REQUIRE(lambda_eval(tp.final) == Catch::Approx(2.0 / 9).margin(1e-15));
    REQUIRE(tp.covers_pairs_on_support);

    // empty graph on 3 vertices: at most 2 steps down to a single vertex
    WeightedHypergraph empty3(Hypergraph::empty(3, 3), {1.0 / 3, 1.0 / 3, 1.0 / 3});
    auto te = symmetrize(empty3);
    REQUIRE(te.steps.size() <= 2);
    REQUIRE(te.final_support.size() == 1);
    REQUIRE(lambda_eval(te.final) == 0.0);
    REQUIRE(te.covers_pairs_on_support);
}

TEST_CASE("symmetrize invariants on random weighted graphs", "[symmetrize]") {
    std::mt19937_64 rng(40302);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const int r = 2 + static_cast<int>(rng() % 2);
        if (r > n) continue;
        auto g = oracles::random_graph(rng, n, r, 40);
        WeightedHypergraph w(g, oracles::random_simplex_point(rng, n));
        const double initial = lambda_eval(w);
        auto trace = symmetrize(w);
        CAPTURE(trial, n, r, g.edge_count());
        REQUIRE(trace.steps.size() <= static_cast<std::size_t>(n - 1));
        double prev = initial;
        for (const auto& step : trace.steps) {
            REQUIRE(step.lambda_before == Catch::Approx(prev).margin(1e-12));
            REQUIRE(step.lambda_after >= step.lambda_before - 1e-12);
            prev = step.lambda_after;
        }
        REQUIRE(lambda_eval(trace.final) >= initial - 1e-12);
        REQUIRE(trace.covers_pairs_on_support);
        // the support reported is exactly the positive-weight set
        for (Vertex v : trace.final_support)
            REQUIRE(trace.final.mu[static_cast<std::size_t>(v)] > 0.0);
        // zeroed vertices stay zeroed: support is decreasing along the trace
        REQUIRE(trace.final_support.size() + trace.steps.size() <=
                static_cast<std::size_t>(n));
    }
}
