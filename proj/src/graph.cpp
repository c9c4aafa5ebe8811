#include "turan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace turan {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge rejected");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge rejected");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

WeightedGraph::WeightedGraph(Graph base_, std::vector<long long> weights_)
    : base(std::move(base_)), weights(std::move(weights_)) {
    if (static_cast<int>(weights.size()) != base.order())
        throw std::invalid_argument("weights length must equal base order");
    for (long long w : weights)
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
}

long long WeightedGraph::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), 0LL);
}

PatternWithDemands::PatternWithDemands(Graph base_, std::vector<int> demands_)
    : base(std::move(base_)), demands(std::move(demands_)) {
    if (static_cast<int>(demands.size()) != base.order())
        throw std::invalid_argument("demands length must equal base order");
    for (int d : demands)
        if (d < 1) throw std::invalid_argument("demands must be positive");
}

int PatternWithDemands::expanded_order() const {
    return std::accumulate(demands.begin(), demands.end(), 0);
}

Graph complete(int k) {
    if (k < 0) throw std::invalid_argument("complete: k must be nonnegative");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
    return Graph(k, std::move(es));
}

Graph path(int m) {
    if (m < 1) throw std::invalid_argument("path: need at least one vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < m; ++i) es.emplace_back(i, i + 1);
    return Graph(m, std::move(es));
}

Graph cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle: need at least three vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) es.emplace_back(i, (i + 1) % m);
    return Graph(m, std::move(es));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<std::pair<int, int>> es = g1.edges();
    for (const auto& [u, v] : g2.edges())
        es.emplace_back(u + g1.order(), v + g1.order());
    return Graph(g1.order() + g2.order(), std::move(es));
}

Graph join(const Graph& g1, const Graph& g2) {
    std::vector<std::pair<int, int>> es = g1.edges();
    for (const auto& [u, v] : g2.edges())
        es.emplace_back(u + g1.order(), v + g1.order());
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v)
            es.emplace_back(u, v + g1.order());
    return Graph(g1.order() + g2.order(), std::move(es));
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

Graph power(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("power: k must be positive");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < g.order(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = u + 1; v < g.order(); ++v)
            if (dist[v] >= 1 && dist[v] <= k) es.emplace_back(u, v);
    }
    return Graph(g.order(), std::move(es));
}

Graph blowup(const Graph& g, const std::vector<long long>& weights) {
    if (static_cast<int>(weights.size()) != g.order())
        throw std::invalid_argument("blowup: weights length must equal order");
    std::vector<long long> start(g.order() + 1, 0);
    for (int v = 0; v < g.order(); ++v) {
        if (weights[v] < 0)
            throw std::invalid_argument("blowup: weights must be nonnegative");
        start[v + 1] = start[v] + weights[v];
    }
    std::vector<std::pair<int, int>> es;
    for (const auto& [u, v] : g.edges())
        for (long long i = 0; i < weights[u]; ++i)
            for (long long j = 0; j < weights[v]; ++j)
                es.emplace_back(static_cast<int>(start[u] + i),
                                static_cast<int>(start[v] + j));
    return Graph(static_cast<int>(start[g.order()]), std::move(es));
}

Graph contract_nonadjacent(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
        throw std::invalid_argument("contract: need two distinct vertices");
    if (g.adjacent(u, v))
        throw std::invalid_argument("contract: vertices must be nonadjacent");
    int keep = std::min(u, v), drop = std::max(u, v);
    auto remap = [&](int w) { return w < drop ? w : w - 1; };
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges()) {
        if (a == drop) a = keep;
        if (b == drop) b = keep;
        es.emplace_back(remap(a), remap(b));
    }
    // merged neighborhoods may overlap; dedupe
    for (auto& [a, b] : es)
        if (a > b) std::swap(a, b);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(g.order() - 1, std::move(es));
}

Graph expand(const PatternWithDemands& p) {
    std::vector<long long> w(p.demands.begin(), p.demands.end());
    return blowup(p.base, w);
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& img,
                std::vector<bool>& used, int v) {
    if (v == a.order()) return true;
    for (int c = 0; c < b.order(); ++c) {
        if (used[c] || a.degree(v) != b.degree(c)) continue;
        bool ok = true;
        for (int u = 0; u < v; ++u) {
            if (a.adjacent(u, v) != b.adjacent(img[u], c)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        img[v] = c;
        used[c] = true;
        if (iso_extend(a, b, img, used, v + 1)) return true;
        used[c] = false;
    }
    return false;
}

}  // namespace

bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> img(a.order(), -1);
    std::vector<bool> used(b.order(), false);
    return iso_extend(a, b, img, used, 0);
}

}  // namespace turan
