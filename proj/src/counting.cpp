#include "turan/counting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace turan {

namespace {

// adjacency rows as 64-bit word vectors
struct BitRows {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitRows(const Graph& g)
        : n(g.order()), words((g.order() + 63) / 64), bits() {
        bits.assign(static_cast<std::size_t>(n) * words, 0);
        for (const auto& [u, v] : g.edges()) {
            row(u)[v / 64] |= 1ULL << (v % 64);
            row(v)[u / 64] |= 1ULL << (u % 64);
        }
    }
    std::uint64_t* row(int v) { return bits.data() + static_cast<std::size_t>(v) * words; }
    const std::uint64_t* row(int v) const {
        return bits.data() + static_cast<std::size_t>(v) * words;
    }
};

}  // namespace

mpz_class count_embeddings_naive(const Graph& pattern, const Graph& host) {
    if (pattern.order() < 1)
        throw std::invalid_argument("count_embeddings_naive: empty pattern");
    const int pn = pattern.order(), hn = host.order();
    if (pn > hn) return 0;

    std::vector<int> order(pn);
    for (int v = 0; v < pn; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pattern.degree(a) > pattern.degree(b) ||
               (pattern.degree(a) == pattern.degree(b) && a < b);
    });
    std::vector<int> pos(pn);
    for (int i = 0; i < pn; ++i) pos[order[i]] = i;
    // earlier-placed pattern neighbors, by position
    std::vector<std::vector<int>> placed_nbrs(pn);
    for (int i = 0; i < pn; ++i)
        for (int u : pattern.neighbors(order[i]))
            if (pos[u] < i) placed_nbrs[i].push_back(pos[u]);

    BitRows adj(host);
    const int words = adj.words;
    std::vector<std::uint64_t> full(words, 0);
    for (int v = 0; v < hn; ++v) full[v / 64] |= 1ULL << (v % 64);

    std::vector<std::uint64_t> used(words, 0);
    std::vector<int> img(pn, -1);
    std::vector<std::uint64_t> cand(words);
    mpz_class total = 0;

    auto rec = [&](auto&& self, int i) -> void {
        for (int w = 0; w < words; ++w) cand[w] = full[w] & ~used[w];
        for (int p : placed_nbrs[i]) {
            const std::uint64_t* row = adj.row(img[p]);
            for (int w = 0; w < words; ++w) cand[w] &= row[w];
        }
        if (i == pn - 1) {
            unsigned long leaves = 0;
            for (int w = 0; w < words; ++w)
                leaves += static_cast<unsigned long>(__builtin_popcountll(cand[w]));
            total += leaves;
            return;
        }
        std::vector<std::uint64_t> mine = cand;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bitsleft = mine[w];
            while (bitsleft) {
                int b = __builtin_ctzll(bitsleft);
                bitsleft &= bitsleft - 1;
                int c = w * 64 + b;
                img[i] = c;
                used[w] |= 1ULL << b;
                self(self, i + 1);
                used[w] &= ~(1ULL << b);
            }
        }
        img[i] = -1;
    };
    rec(rec, 0);
    return total;
}

std::vector<std::vector<int>> false_twin_classes(const Graph& g) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < g.order(); ++v) groups[g.neighbors(v)].push_back(v);
    std::vector<std::vector<int>> classes;
    classes.reserve(groups.size());
    for (auto& [nbrs, members] : groups) classes.push_back(members);
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a.front() < b.front();
              });
    return classes;
}

namespace {

// Isomorphism count of a vertex-labelled graph onto itself; labels must be
// preserved. Plain backtracking, intended for twin-free quotients.
mpz_class labelled_automorphisms(const Graph& g, const std::vector<long long>& label) {
    const int n = g.order();
    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    mpz_class count = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c] || g.degree(c) != g.degree(v) || label[c] != label[v])
                continue;
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v) != g.adjacent(img[u], c)) { ok = false; break; }
            if (!ok) continue;
            img[v] = c;
            used[c] = true;
            self(self, v + 1);
            used[c] = false;
        }
        img[v] = -1;
    };
    rec(rec, 0);
    return count;
}

mpz_class factorial(unsigned long m) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

}  // namespace

mpz_class automorphism_count(const Graph& pattern) {
    if (pattern.order() < 1)
        throw std::invalid_argument("automorphism_count: empty pattern");
    // Automorphisms permute false-twin classes; within a class any
    // permutation lifts, so |Aut| = prod |class|! times the automorphism
    // count of the size-labelled quotient (which is twin-free).
    auto classes = false_twin_classes(pattern);
    const int t = static_cast<int>(classes.size());
    mpz_class within = 1;
    std::vector<long long> sizes(t);
    for (int i = 0; i < t; ++i) {
        sizes[i] = static_cast<long long>(classes[i].size());
        within *= factorial(classes[i].size());
    }
    std::vector<std::pair<int, int>> qedges;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (pattern.adjacent(classes[i].front(), classes[j].front()))
                qedges.emplace_back(i, j);
    Graph quotient(t, std::move(qedges));
    return within * labelled_automorphisms(quotient, sizes);
}

CountResult count_copies(const Graph& pattern, const Graph& host) {
    CountResult result;
    result.labelled = count_embeddings_naive(pattern, host);
    result.aut = automorphism_count(pattern);
    mpz_class rem;
    mpz_fdiv_qr(result.unlabelled.get_mpz_t(), rem.get_mpz_t(),
                result.labelled.get_mpz_t(), result.aut.get_mpz_t());
    if (rem != 0)
        throw std::logic_error("count_copies: labelled count not divisible by |Aut|");
    return result;
}

namespace {

mpz_class falling_factorial(long long w, long long k) {
    if (k > w) return 0;
    mpz_class r = 1;
    for (long long i = 0; i < k; ++i) r *= static_cast<long>(w - i);
    return r;
}

struct BlowupCounter {
    const Graph& base;                          // host quotient
    const std::vector<long long>& weights;      // part sizes
    std::vector<std::vector<int>> classes;      // expanded-pattern twin classes
    std::vector<std::vector<bool>> class_adj;
    std::vector<long long> loads;
    std::vector<std::vector<int>> parts_used;
    mpz_class total = 0;

    BlowupCounter(const Graph& expanded_pattern, const Graph& host_base,
                  const std::vector<long long>& host_weights)
        : base(host_base), weights(host_weights),
          classes(false_twin_classes(expanded_pattern)),
          loads(host_base.order(), 0), parts_used(classes.size()) {
        const int t = static_cast<int>(classes.size());
        class_adj.assign(t, std::vector<bool>(t, false));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if (i != j &&
                    expanded_pattern.adjacent(classes[i].front(), classes[j].front()))
                    class_adj[i][j] = true;
    }

    std::vector<int> admissible(int cls) const {
        std::vector<int> adm;
        for (int b = 0; b < base.order(); ++b) {
            if (loads[b] >= weights[b]) continue;
            bool ok = true;
            for (int j = 0; j < cls && ok; ++j) {
                if (!class_adj[cls][j]) continue;
                for (int pb : parts_used[j])
                    if (pb == b || !base.adjacent(pb, b)) { ok = false; break; }
            }
            if (ok) adm.push_back(b);
        }
        return adm;
    }

    void place_class(int cls, const mpz_class& acc) {
        if (cls == static_cast<int>(classes.size())) {
            total += acc;
            return;
        }
        auto adm = admissible(cls);
        parts_used[cls].clear();
        distribute(cls, adm, 0, static_cast<long long>(classes[cls].size()), acc);
        parts_used[cls].clear();
    }

    // compositions in lexicographic order over the admissible part list
    void distribute(int cls, const std::vector<int>& adm, std::size_t idx,
                    long long remaining, const mpz_class& acc) {
        if (idx == adm.size()) {
            if (remaining == 0) place_class(cls + 1, acc);
            return;
        }
        int b = adm[idx];
        long long cap = weights[b] - loads[b];
        for (long long x = 0; x <= remaining; ++x) {
            if (x > cap) break;  // falling factorial would be zero
            mpz_class next = acc;
            if (x > 0) {
                mpz_class choose;
                mpz_bin_uiui(choose.get_mpz_t(),
                             static_cast<unsigned long>(remaining),
                             static_cast<unsigned long>(x));
                next *= choose;
                next *= falling_factorial(cap, x);
                loads[b] += x;
                parts_used[cls].push_back(b);
            }
            distribute(cls, adm, idx + 1, remaining - x, next);
            if (x > 0) {
                loads[b] -= x;
                parts_used[cls].pop_back();
            }
        }
    }
};

}  // namespace

mpz_class count_in_blowup(const PatternWithDemands& pattern,
                          const WeightedGraph& host) {
    Graph expanded = expand(pattern);
    if (expanded.order() == 0) return 1;
    BlowupCounter counter(expanded, host.base, host.weights);
    counter.place_class(0, 1);
    return counter.total;
}

mpz_class count_in_complete_multipartite(const PatternWithDemands& pattern,
                                         const std::vector<long long>& parts) {
    WeightedGraph host(complete(static_cast<int>(parts.size())), parts);
    return count_in_blowup(pattern, host);
}

}  // namespace turan
