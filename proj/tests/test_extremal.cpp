#include <catch2/catch_amalgamated.hpp>

#include <turanlab/turanlab.hpp>

#include "support/fixtures.hpp"

using namespace turanlab;

TEST_CASE("bollobas formula values", "[extremal]") {
    REQUIRE(bollobas_formula(3) == 1);
    REQUIRE(bollobas_formula(6) == 8);
    REQUIRE(bollobas_formula(7) == 12);
    REQUIRE_THROWS_AS(bollobas_formula(2), InvalidArgument);
}

TEST_CASE("sigma-free maxima match the formula for n = 4,5,6", "[extremal]") {
    for (int n = 4; n <= 6; ++n) {
        auto res = max_free_edges(n, 3, {ForbiddenPattern::SigmaMember});
        CAPTURE(n);
        REQUIRE(res.certified);
        REQUIRE(res.max_edges == bollobas_formula(n));
        auto check = extremal_witness_check(res);
        REQUIRE(check.edge_count_ok);
        REQUIRE(check.freeness_ok);
    }
}

TEST_CASE("triangle-free (K3) maxima reproduce Mantel", "[extremal]") {
    for (int n = 4; n <= 8; ++n) {
        auto res = max_free_edges(n, 2, {ForbiddenPattern::Clique, 3});
        CAPTURE(n);
        REQUIRE(res.certified);
        REQUIRE(res.max_edges == n * n / 4);
    }
}

TEST_CASE("generalized-triangle-free bound dominates sigma-free", "[extremal]") {
    for (int n = 4; n <= 6; ++n) {
        auto t = max_free_edges(n, 3, {ForbiddenPattern::GeneralizedTriangle});
        auto s = max_free_edges(n, 3, {ForbiddenPattern::SigmaMember});
        CAPTURE(n);
        REQUIRE(t.certified);
        REQUIRE(t.max_edges >= s.max_edges);
    }
    // the generalized triangle needs 5 distinct vertices, so on 4 vertices
    // every 3-graph is triangle-free and the maximum is all of them
    auto t4 = max_free_edges(4, 3, {ForbiddenPattern::GeneralizedTriangle});
    REQUIRE(t4.max_edges == 4);
}

TEST_CASE("thin-pair pattern recovers partial Steiner maxima", "[extremal]") {
    // a thin 3-graph on 7 vertices has at most C(7,2)/3 = 7 edges (Fano)
    auto res = max_free_edges(7, 3, {ForbiddenPattern::ThinPair},
                              {.n_cap_override = 8});
    REQUIRE(res.certified);
    REQUIRE(res.max_edges == 7);
    REQUIRE(extremal_witness_check(res).freeness_ok);
}

TEST_CASE("budget exhaustion flags the result as not certified", "[extremal]") {
    SearchOptions opts;
    opts.node_budget = 50;
    auto res = max_free_edges(6, 3, {ForbiddenPattern::SigmaMember}, opts);
    REQUIRE_FALSE(res.certified);
    // best-so-far is still a valid free graph
    REQUIRE(extremal_witness_check(res).freeness_ok);
    REQUIRE(res.max_edges >= 8); // the multipartite seed alone reaches the optimum
}

TEST_CASE("parallel search returns the sequential edge count", "[extremal]") {
    for (int n = 5; n <= 6; ++n) {
        auto seq = max_free_edges(n, 3, {ForbiddenPattern::SigmaMember});
        SearchOptions par;
        par.parallel = true;
        par.threads = 2;
        auto parallel = max_free_edges(n, 3, {ForbiddenPattern::SigmaMember}, par);
        CAPTURE(n);
        REQUIRE(parallel.certified);
        REQUIRE(parallel.max_edges == seq.max_edges);

        SearchOptions det;
        det.parallel = true;
        det.deterministic = true;
        auto deterministic = max_free_edges(n, 3, {ForbiddenPattern::SigmaMember}, det);
        REQUIRE(deterministic.max_edges == seq.max_edges);
        REQUIRE(deterministic.witness == seq.witness);
        REQUIRE(deterministic.nodes_explored == seq.nodes_explored);
    }
}

TEST_CASE("search argument validation", "[extremal]") {
    REQUIRE_THROWS_AS(max_free_edges(6, 4, {ForbiddenPattern::SigmaMember}), InvalidArgument);
    REQUIRE_THROWS_AS(max_free_edges(9, 3, {ForbiddenPattern::SigmaMember}), InvalidArgument);
    REQUIRE_THROWS_AS(max_free_edges(6, 3, {ForbiddenPattern::Clique, 3}), InvalidArgument);
    REQUIRE_THROWS_AS(max_free_edges(6, 2, {ForbiddenPattern::Clique, 1}), InvalidArgument);
}

namespace {

/// Exhaustive oracle: maximum free edge count over every subset of the
/// candidate edges, freeness judged by the definition-literal scans.
long long enumerate_max_free(int n, int r, ForbiddenPattern kind, int t = 3) {
    auto subsets = all_subsets(n, r);
    long long best = 0;
    for (std::uint32_t mask = 0; mask < (1u << subsets.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < subsets.size(); ++i)
            if (mask >> i & 1) edges.push_back(subsets[i]);
        const long long count = static_cast<long long>(edges.size());
        if (count <= best) continue;
        Hypergraph g(r, n, std::move(edges));
        bool free = true;
        switch (kind) {
            case ForbiddenPattern::SigmaMember: free = !brute::has_sigma_member(g); break;
            case ForbiddenPattern::GeneralizedTriangle:
                free = !brute::has_generalized_triangle(g);
                break;
            case ForbiddenPattern::Clique: free = !brute::has_clique(g, t); break;
            case ForbiddenPattern::ThinPair: free = !brute::has_thin_violation(g); break;
        }
        if (free) best = count;
    }
    return best;
}

} // namespace

TEST_CASE("search agrees with complete subset enumeration", "[extremal]") {
    for (int n = 4; n <= 5; ++n) {
        for (auto kind : {ForbiddenPattern::SigmaMember, ForbiddenPattern::GeneralizedTriangle,
                          ForbiddenPattern::ThinPair}) {
            auto res = max_free_edges(n, 3, {kind});
            CAPTURE(n, static_cast<int>(kind));
            REQUIRE(res.certified);
            REQUIRE(res.max_edges == enumerate_max_free(n, 3, kind));
        }
        for (int t = 3; t <= 4; ++t) {
            auto res = max_free_edges(n, 2, {ForbiddenPattern::Clique, t});
            CAPTURE(n, t);
            REQUIRE(res.max_edges == enumerate_max_free(n, 2, ForbiddenPattern::Clique, t));
        }
    }
}

TEST_CASE("witness check catches tampering", "[extremal]") {
    auto res = max_free_edges(5, 3, {ForbiddenPattern::SigmaMember});
    REQUIRE(extremal_witness_check(res).freeness_ok);

    SearchResult tampered = res;
    auto edges = res.witness.edges();
    edges.pop_back();
    tampered.witness = Hypergraph(3, 5, std::move(edges));
    REQUIRE_FALSE(extremal_witness_check(tampered).edge_count_ok);

    SearchResult with_t3 = res;
    with_t3.witness = fixtures::t3();
    REQUIRE_FALSE(extremal_witness_check(with_t3).freeness_ok);
    REQUIRE_FALSE(extremal_witness_check(with_t3).edge_count_ok);
}
