#include "turan/props.hpp"

#include <algorithm>
#include <stdexcept>

namespace turan {

std::optional<int> diameter(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("diameter: empty graph");
    int best = 0;
    for (int u = 0; u < g.order(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    int best = 0;

    explicit CliqueSearch(const Graph& graph) : g(graph) {}

    // greedy colouring of the candidate set; returns candidates reordered by
    // color class with their color numbers (1-based upper bounds)
    void expand(std::vector<int>& cand, int size) {
        best = std::max(best, size);
        if (cand.empty()) return;
        std::vector<int> colored, colors;
        {
            std::vector<std::vector<int>> classes;
            for (int v : cand) {
                std::size_t c = 0;
                while (c < classes.size()) {
                    bool clash = false;
                    for (int u : classes[c])
                        if (g.adjacent(u, v)) { clash = true; break; }
                    if (!clash) break;
                    ++c;
                }
                if (c == classes.size()) classes.emplace_back();
                classes[c].push_back(v);
            }
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (int v : classes[c]) {
                    colored.push_back(v);
                    colors.push_back(static_cast<int>(c) + 1);
                }
        }
        for (int i = static_cast<int>(colored.size()) - 1; i >= 0; --i) {
            if (size + colors[i] <= best) return;
            int v = colored[i];
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g.adjacent(colored[j], v)) next.push_back(colored[j]);
            expand(next, size + 1);
        }
    }
};

}  // namespace

int clique_number(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("clique_number: empty graph");
    std::vector<int> cand(g.order());
    for (int v = 0; v < g.order(); ++v) cand[v] = v;
    std::sort(cand.begin(), cand.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b) ||
                                         (g.degree(a) == g.degree(b) && a < b); });
    CliqueSearch search(g);
    search.expand(cand, 0);
    return search.best;
}

namespace {

// Static vertex order with identical-neighborhood twins consecutive and
// high-degree groups first, so twin branches fail at the earliest position.
std::vector<int> coloring_order(const Graph& g) {
    std::vector<int> order(g.order());
    for (int v = 0; v < g.order(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        if (g.neighbors(a) != g.neighbors(b)) return g.neighbors(a) < g.neighbors(b);
        return a < b;
    });
    return order;
}

struct ColoringSearch {
    const Graph& g;
    int k;
    bool stop_at_first;
    std::vector<int> order;
    std::vector<int> color;
    mpz_class count = 0;
    std::vector<int> witness;

    ColoringSearch(const Graph& graph, int colors, bool stop)
        : g(graph), k(colors), stop_at_first(stop),
          order(coloring_order(graph)), color(graph.order(), -1) {}

    bool run() { return rec(0, -1); }

    // returns true when stop_at_first and a coloring was found
    bool rec(std::size_t i, int max_used) {
        if (i == order.size()) {
            ++count;
            if (witness.empty()) witness = color;
            return stop_at_first;
        }
        int v = order[i];
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[u] == c) { ok = false; break; }
            if (!ok) continue;
            color[v] = c;
            if (rec(i + 1, std::max(max_used, c))) { color[v] = -1; return true; }
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace

ColoringSummary count_proper_colorings_as_partitions(const Graph& g, int k) {
    if (g.order() == 0)
        throw std::invalid_argument("coloring count: empty graph");
    if (k < 1) throw std::invalid_argument("coloring count: k must be positive");
    ColoringSearch search(g, k, false);
    search.run();
    ColoringSummary summary;
    summary.k = k;
    summary.count_partitions = search.count;
    if (!search.witness.empty()) {
        int classes = 1 + *std::max_element(search.witness.begin(),
                                            search.witness.end());
        summary.witness.assign(classes, {});
        for (int v = 0; v < g.order(); ++v)
            summary.witness[search.witness[v]].push_back(v);
    }
    return summary;
}

int chromatic_number(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("chromatic_number: empty graph");
    for (int k = clique_number(g);; ++k) {
        ColoringSearch search(g, k, true);
        if (search.run()) return k;
    }
}

bool is_kr_free_blowup(const WeightedGraph& w, int r) {
    if (r < 2) throw std::invalid_argument("is_kr_free_blowup: r must be >= 2");
    std::vector<int> keep;
    std::vector<int> newid(w.base.order(), -1);
    for (int v = 0; v < w.base.order(); ++v)
        if (w.weights[v] >= 1) {
            newid[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    if (keep.empty()) return true;
    std::vector<std::pair<int, int>> es;
    for (const auto& [u, v] : w.base.edges())
        if (newid[u] >= 0 && newid[v] >= 0) es.emplace_back(newid[u], newid[v]);
    Graph quotient(static_cast<int>(keep.size()), std::move(es));
    return clique_number(quotient) < r;
}

}  // namespace turan
