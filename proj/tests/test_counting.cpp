#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"
#include "turan/counting.hpp"
#include "turan/extremal.hpp"
#include "turan/graph.hpp"

using namespace turan;

TEST_CASE("naive embedding counts") {
    CHECK(count_embeddings_naive(complete(2), complete(3)) == 6);
    CHECK(count_embeddings_naive(path(3), blowup(complete(2), {2, 3})) == 18);
    CHECK(count_embeddings_naive(complete(3), cycle(5)) == 0);
    CHECK(count_embeddings_naive(path(4), complete(3)) == 0);  // too few vertices
    CHECK_THROWS_AS(count_embeddings_naive(Graph(0), complete(3)),
                    std::invalid_argument);
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(path(6)) == 2);
    CHECK(automorphism_count(cycle(5)) == 10);
    CHECK(automorphism_count(complete(4)) == 24);
    CHECK(automorphism_count(Graph(3)) == 6);
    // blown-up construction: 2! * 2! within the endpoint classes, times the
    // path flip
    CHECK(automorphism_count(expand(build_G(4, 2).pattern)) == 8);
}

TEST_CASE("count_copies divides labelled by |Aut|") {
    CHECK(count_copies(complete(2), complete(3)).unlabelled == 3);
    CHECK(count_copies(path(3), blowup(complete(2), {2, 3})).unlabelled == 9);
    Graph c5 = cycle(5);
    CHECK(count_copies(c5, c5).unlabelled == 1);
}

TEST_CASE("blow-up counter on explicit examples") {
    PatternWithDemands edge(complete(2), {1, 1});
    CHECK(count_in_blowup(edge, WeightedGraph(complete(2), {2, 3})) == 12);
    PatternWithDemands triangle(complete(3), {1, 1, 1});
    CHECK(count_in_blowup(triangle, WeightedGraph(complete(3), {2, 2, 2})) == 48);
    CHECK(count_in_complete_multipartite(edge, {3, 3}) == 18);
    CHECK(count_in_complete_multipartite(triangle, {2, 2, 2}) == 48);
}

TEST_CASE("blow-up counter equals the naive oracle on the paper instances") {
    // demands 2 on both endpoints, host from the quotient construction
    EndpointedPattern g = build_G(4, 1);
    WeightedGraph s = build_S_spec(4, 36, mpq_class(1, 12));
    CHECK(count_in_blowup(g.pattern, s) ==
          count_embeddings_naive(expand(g.pattern), blowup(s.base, s.weights)));

    PatternWithDemands demand_form = build_G(4, 1).pattern;
    std::vector<long long> parts{4, 4, 4};
    CHECK(count_in_complete_multipartite(demand_form, parts) ==
          count_embeddings_naive(expand(demand_form),
                                 blowup(complete(3), parts)));
}

TEST_CASE("oracle equivalence on random compressed instances") {
    std::mt19937 rng(303);
    for (int i = 0; i < 80; ++i) {
        Graph pb = turan::testing::random_graph(rng, 1 + i % 6, 0.5);
        auto dem = turan::testing::random_demands(rng, pb.order(), 1, 3);
        Graph wb = turan::testing::random_graph(rng, 1 + i % 5, 0.5);
        auto wt = turan::testing::random_weights(rng, wb.order(), 0, 4);
        PatternWithDemands pattern(pb, dem);
        WeightedGraph host(wb, wt);
        Graph ep = expand(pattern);
        Graph eh = blowup(wb, wt);
        mpz_class fast = count_in_blowup(pattern, host);
        if (ep.order() == 0 || eh.order() == 0) continue;
        CHECK(fast == count_embeddings_naive(ep, eh));
    }
}

TEST_CASE("adding host edges never decreases the count") {
    std::mt19937 rng(404);
    for (int i = 0; i < 40; ++i) {
        Graph p = turan::testing::random_graph(rng, 1 + i % 4, 0.5);
        Graph h = turan::testing::random_graph(rng, 2 + i % 6, 0.4);
        mpz_class before = count_embeddings_naive(p, h);
        // add every missing edge one at a time
        for (int u = 0; u < h.order(); ++u)
            for (int v = u + 1; v < h.order(); ++v) {
                if (h.adjacent(u, v)) continue;
                auto es = h.edges();
                es.emplace_back(u, v);
                CHECK(count_embeddings_naive(p, Graph(h.order(), es)) >= before);
            }
    }
}

TEST_CASE("zero laws") {
    // complete pattern needs a host clique at least as large
    CHECK(count_embeddings_naive(complete(3), blowup(complete(2), {3, 3})) == 0);
    CHECK(count_embeddings_naive(complete(5), complete(4)) == 0);
}

TEST_CASE("labelled is divisible by |Aut| on random instances") {
    std::mt19937 rng(505);
    for (int i = 0; i < 40; ++i) {
        Graph p = turan::testing::random_graph(rng, 1 + i % 5, 0.5);
        Graph h = turan::testing::random_graph(rng, 3 + i % 6, 0.5);
        CountResult r = count_copies(p, h);
        CHECK(r.labelled == r.unlabelled * r.aut);
        CHECK(r.aut >= 1);
    }
}

TEST_CASE("multipartite count is symmetric in the parts") {
    std::mt19937 rng(606);
    PatternWithDemands pattern(build_G(4, 1).pattern);
    std::vector<long long> parts{5, 3, 2};
    mpz_class reference = count_in_complete_multipartite(pattern, parts);
    std::sort(parts.begin(), parts.end());
    do {
        CHECK(count_in_complete_multipartite(pattern, parts) == reference);
    } while (std::next_permutation(parts.begin(), parts.end()));
}

TEST_CASE("false twin classes") {
    // K_{2,3}: two classes, sizes 2 and 3
    auto classes = false_twin_classes(blowup(complete(2), {2, 3}));
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].size() == 2);
    CHECK(classes[1].size() == 3);
    // a path has no false twins
    CHECK(false_twin_classes(path(5)).size() == 5);
}
