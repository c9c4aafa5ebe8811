#pragma once

#include <string>
#include <utility>
#include <vector>

namespace turan {

// Simple undirected graph on vertices 0..n-1. The logical model is a sorted
// edge set (u < v, lexicographic); adjacency lists are derived at
// construction. Immutable after construction, so values are freely shareable
// across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : Graph(n, {}) {}
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Blow-up B[w]: base graph plus a nonnegative part size per vertex. The
// expanded graph replaces vertex b by an independent set of w[b] clones.
struct WeightedGraph {
    Graph base;
    std::vector<long long> weights;

    WeightedGraph(Graph base_, std::vector<long long> weights_);
    long long total_weight() const;
};

// Compressed pattern P0[d]: base graph plus a positive demand per vertex.
// The expansion has sum(d) vertices.
struct PatternWithDemands {
    Graph base;
    std::vector<int> demands;

    PatternWithDemands(Graph base_, std::vector<int> demands_);
    int expanded_order() const;
};

Graph complete(int k);
Graph path(int m);   // endpoints are vertices 0 and m-1
Graph cycle(int m);  // m >= 3

// Disjoint union plus all cross edges; g1 keeps indices 0..n1-1.
Graph join(const Graph& g1, const Graph& g2);

// Index-shifted union, no cross edges.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Edge {u,v} iff 1 <= dist(u,v) <= k; distinct components stay apart.
Graph power(const Graph& g, int k);

// Clones of vertex 0 come first, then clones of vertex 1, etc. Parts are
// independent sets; parts of adjacent base vertices are completely joined.
Graph blowup(const Graph& g, const std::vector<long long>& weights);

// Identify two nonadjacent vertices; the merged vertex sits at min(u,v) and
// inherits N(u) | N(v), the slot max(u,v) is removed. Rejects adjacent u,v.
Graph contract_nonadjacent(const Graph& g, int u, int v);

// Oracle bridge between compressed and explicit patterns.
Graph expand(const PatternWithDemands& p);

// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

// Exhaustive isomorphism test, intended for n <= 10.
bool isomorphic_bruteforce(const Graph& a, const Graph& b);

}  // namespace turan
