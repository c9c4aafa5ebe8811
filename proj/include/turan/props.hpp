#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct ColoringSummary {
    int k = 0;
    // proper colorings counted as vertex partitions (colors unlabelled)
    mpz_class count_partitions;
    // one proper coloring as a partition of V; empty when none exists
    std::vector<std::vector<int>> witness;
};

// Max shortest-path distance over vertex pairs; nullopt for disconnected
// graphs (disjoint-union intermediates are legitimately disconnected).
// Rejects the empty graph.
std::optional<int> diameter(const Graph& g);

// Exact clique number by branch and bound with greedy colouring bounds.
int clique_number(const Graph& g);

// Exact chromatic number: iterative deepening from the clique lower bound,
// deciding k-colorability by backtracking.
int chromatic_number(const Graph& g);

// Exhaustive count of proper colorings as partitions into at most k classes.
// Color c is usable only once colors 0..c-1 appear on earlier vertices, so
// each partition is counted exactly once. Vertices with identical
// neighborhoods are ordered consecutively so interchangeable twins fail fast.
ColoringSummary count_proper_colorings_as_partitions(const Graph& g, int k);

// A blow-up is K_r-free iff the clique number of its positively-weighted
// quotient is below r: parts are independent, so a clique meets each part at
// most once.
bool is_kr_free_blowup(const WeightedGraph& w, int r);

}  // namespace turan
