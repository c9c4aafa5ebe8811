#pragma once

#include <gmpxx.h>

#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct CountResult {
    mpz_class labelled;    // injective edge-preserving maps of the pattern
    mpz_class aut;         // |Aut(pattern)|
    mpz_class unlabelled;  // labelled / aut, exact divisibility asserted
};

// Number of injective maps V(P) -> V(G) sending every P-edge to a G-edge
// (subgraph embeddings, not induced). Backtracking in a static
// descending-degree order, pruning by neighbor-image adjacency.
mpz_class count_embeddings_naive(const Graph& pattern, const Graph& host);

// Number of isomorphisms of the pattern onto itself (adjacency preserved in
// both directions).
mpz_class automorphism_count(const Graph& pattern);

CountResult count_copies(const Graph& pattern, const Graph& host);

// Groups of mutually nonadjacent vertices with identical neighborhoods,
// interchangeable in any embedding. Deterministic order: by class size
// ascending, then by smallest member.
std::vector<std::vector<int>> false_twin_classes(const Graph& g);

// Exact labelled copies of expand(pattern) in expand(host), computed without
// expansion: backtrack over false-twin classes of the expanded pattern,
// enumerate distributions of each class over admissible host parts
// (compositions in lexicographic order), weight by multinomials, and close
// each part with a falling factorial of its weight at its total load.
// A load exceeding the part weight contributes 0.
mpz_class count_in_blowup(const PatternWithDemands& pattern,
                          const WeightedGraph& host);

mpz_class count_in_complete_multipartite(const PatternWithDemands& pattern,
                                         const std::vector<long long>& parts);

}  // namespace turan
