#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "turan/extremal.hpp"
#include "turan/graph.hpp"
#include "turan/props.hpp"

using namespace turan;

namespace {

// independent oracle: Floyd-Warshall diameter
std::optional<int> diameter_floyd(const Graph& g) {
    const int n = g.order();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    int best = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (d[i][j] >= inf) return std::nullopt;
            best = std::max(best, d[i][j]);
        }
    return best;
}

}  // namespace

TEST_CASE("diameter") {
    CHECK(diameter(path(6)) == 5);
    CHECK(diameter(build_H(4).graph) == 2);
    CHECK_FALSE(diameter(disjoint_union(complete(1), complete(1))).has_value());
    CHECK(diameter(complete(1)) == 0);
    CHECK_THROWS_AS(diameter(Graph(0)), std::invalid_argument);
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(complete(1)) == 1);
    for (int k = 1; k <= 6; ++k) CHECK(chromatic_number(complete(k)) == k);
    for (int r = 4; r <= 8; ++r)
        CHECK(chromatic_number(build_H(r).graph) == r - 1);
}

TEST_CASE("clique number") {
    CHECK(clique_number(cycle(5)) == 2);
    CHECK(clique_number(build_Q(4).graph) == 3);
    for (int k = 1; k <= 6; ++k) CHECK(clique_number(complete(k)) == k);
    for (int r = 4; r <= 8; ++r)
        CHECK(clique_number(build_Q(r).graph) == r - 1);
}

TEST_CASE("colorings as partitions") {
    CHECK(count_proper_colorings_as_partitions(complete(3), 3).count_partitions == 1);
    CHECK(count_proper_colorings_as_partitions(cycle(4), 2).count_partitions == 1);
    CHECK(count_proper_colorings_as_partitions(complete(3), 2).count_partitions == 0);
    CHECK(count_proper_colorings_as_partitions(complete(3), 2).witness.empty());
    CHECK_THROWS_AS(count_proper_colorings_as_partitions(complete(2), 0),
                    std::invalid_argument);
}

TEST_CASE("unique coloring of the blown-up construction marks endpoints") {
    EndpointedPattern g = build_G(4, 2);
    Graph expanded = expand(g.pattern);
    ColoringSummary summary = count_proper_colorings_as_partitions(expanded, 3);
    CHECK(summary.count_partitions == 1);
    REQUIRE_FALSE(summary.witness.empty());
    // clone ranges in the expansion layout
    int start_x = 0, start_y = 0, acc = 0;
    for (int b = 0; b < g.pattern.base.order(); ++b) {
        if (b == g.x) start_x = acc;
        if (b == g.y) start_y = acc;
        acc += g.pattern.demands[b];
    }
    auto class_of = [&](int v) {
        for (std::size_t c = 0; c < summary.witness.size(); ++c)
            for (int u : summary.witness[c])
                if (u == v) return static_cast<int>(c);
        return -1;
    };
    int cx = class_of(start_x), cy = class_of(start_y);
    CHECK(cx != cy);
    CHECK(class_of(start_x + 1) == cx);
    CHECK(class_of(start_y + 1) == cy);
}

TEST_CASE("structural facts for the blown-up construction family") {
    for (int r = 4; r <= 8; ++r) {
        for (int a = 1; a <= 3; ++a) {
            Graph expanded = expand(build_G(r, a).pattern);
            CHECK(diameter(expanded) == 2);
            CHECK(chromatic_number(expanded) == r - 1);
            CHECK(count_proper_colorings_as_partitions(expanded, r - 1)
                      .count_partitions == 1);
        }
    }
}

TEST_CASE("blow-up K_r-freeness from the quotient") {
    CHECK(is_kr_free_blowup(build_S_spec(4, 1000, mpq_class(1, 20)), 4));
    CHECK_FALSE(is_kr_free_blowup(
        WeightedGraph(complete(4), {1, 1, 1, 1}), 4));
    CHECK(is_kr_free_blowup(WeightedGraph(complete(4), {1, 1, 1, 0}), 4));
    CHECK_THROWS_AS(is_kr_free_blowup(WeightedGraph(complete(2), {1, 1}), 1),
                    std::invalid_argument);
}

TEST_CASE("random suite: bounds, oracle agreement, twin freeness check") {
    std::mt19937 rng(101);
    for (int i = 0; i < 100; ++i) {
        Graph g = turan::testing::random_graph(rng, 1 + i % 9, 0.45);
        int chi = chromatic_number(g);
        int omega = clique_number(g);
        CHECK(chi >= omega);
        CHECK(diameter(g) == diameter_floyd(g));
        CHECK(count_proper_colorings_as_partitions(g, chi).count_partitions >= 1);
    }
}

TEST_CASE("random suite: quotient K_r-freeness equals expanded clique check") {
    std::mt19937 rng(202);
    int done = 0;
    while (done < 60) {
        Graph g = turan::testing::random_graph(rng, 1 + done % 5, 0.5);
        auto w = turan::testing::random_weights(rng, g.order(), 0, 4);
        long long total = 0;
        for (long long x : w) total += x;
        if (total == 0 || total > 12) continue;
        Graph expanded = blowup(g, w);
        if (expanded.order() == 0) continue;
        for (int r = 2; r <= 5; ++r)
            CHECK(is_kr_free_blowup(WeightedGraph(g, w), r) ==
                  (clique_number(expanded) < r));
        ++done;
    }
}
