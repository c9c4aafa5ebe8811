#pragma once

#include <random>
#include <vector>

#include "turan/graph.hpp"

namespace turan::testing {

// Erdos-Renyi-style graph with a fixed edge-decision order, so seeds give
// reproducible instances.
inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

inline std::vector<int> random_demands(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> pick(lo, hi);
    std::vector<int> d(n);
    for (int& x : d) x = pick(rng);
    return d;
}

inline std::vector<long long> random_weights(std::mt19937& rng, int n, long long lo,
                                             long long hi) {
    std::uniform_int_distribution<long long> pick(lo, hi);
    std::vector<long long> w(n);
    for (long long& x : w) x = pick(rng);
    return w;
}

}  // namespace turan::testing
