#include "turan/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "turan/counting.hpp"
#include "turan/props.hpp"

namespace turan {

EndpointedGraph build_H(int r) {
    if (r < 4) throw std::invalid_argument("build_H: r >= 4 required");
    EndpointedGraph h;
    h.graph = join(complete(r - 3), path(6));
    h.x = r - 3;
    h.y = r + 2;
    return h;
}

EndpointedPattern build_G(int r, int a) {
    if (a < 1) throw std::invalid_argument("build_G: a >= 1 required");
    EndpointedGraph h = build_H(r);
    std::vector<int> demands(h.graph.order(), 1);
    demands[h.x] = a;
    demands[h.y] = a;
    return EndpointedPattern{PatternWithDemands(h.graph, std::move(demands)),
                             h.x, h.y};
}

QuotientGraph build_Q(int r) {
    if (r < 4) throw std::invalid_argument("build_Q: r >= 4 required");
    QuotientGraph q;
    q.graph = join(complete(r - 3), cycle(5));
    q.z = r - 3;
    return q;
}

WeightedGraph build_S_spec(int r, long long n, const mpq_class& eps) {
    QuotientGraph q = build_Q(r);
    mpz_class f = floor_product(eps, n);
    if (f < 1)
        throw std::invalid_argument("build_S_spec: floor(eps*n) must be >= 1");
    mpz_class wz = mpz_class(static_cast<long>(n)) - mpz_class(r + 1) * f;
    if (wz < 1)
        throw std::invalid_argument("build_S_spec: weight on z must be >= 1");
    std::vector<long long> weights(q.graph.order(), f.get_si());
    weights[q.z] = wz.get_si();
    return WeightedGraph(q.graph, std::move(weights));
}

EndpointedGraph build_power_path_base(int r) {
    if (r < 3)
        throw std::invalid_argument("build_power_path_base: r >= 3 required");
    EndpointedGraph g;
    g.graph = power(path(2 * r), r - 2);
    g.x = 0;
    g.y = 2 * r - 1;
    return g;
}

namespace {

// non-increasing part vectors of length k summing to n, in decreasing
// lexicographic order
void each_partition(long long n, int k, long long cap, std::vector<long long>& cur,
                    const std::function<void(const std::vector<long long>&)>& fn) {
    if (k == 1) {
        if (n <= cap) {
            cur.push_back(n);
            fn(cur);
            cur.pop_back();
        }
        return;
    }
    for (long long first = std::min(n, cap); first >= 0; --first) {
        if (first * k < n) break;  // remaining slots cannot absorb n
        cur.push_back(first);
        each_partition(n - first, k - 1, first, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

PartiteMaximum max_partite_exact(const PatternWithDemands& pattern,
                                 int parts_count, long long n) {
    if (parts_count < 1)
        throw std::invalid_argument("max_partite_exact: parts_count >= 1 required");
    if (n < 1) throw std::invalid_argument("max_partite_exact: n >= 1 required");
    PartiteMaximum best;
    best.value = -1;
    std::vector<long long> cur;
    each_partition(n, parts_count, n, cur, [&](const std::vector<long long>& p) {
        mpz_class c = count_in_complete_multipartite(pattern, p);
        if (c > best.value) {
            best.value = c;
            best.parts = p;
        }
    });
    return best;
}

namespace {

// Euclidean projection onto the probability simplex.
std::vector<double> project_simplex(std::vector<double> v) {
    const int n = static_cast<int>(v.size());
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0, theta = 0;
    int rho = 0;
    for (int i = 0; i < n; ++i) {
        cum += u[i];
        double t = (cum - 1.0) / (i + 1);
        if (u[i] - t > 0) {
            rho = i + 1;
            theta = t;
        }
    }
    for (double& x : v) x = std::max(0.0, x - theta);
    return v;
}

// Best rational approximation to x with denominator <= maxden, via continued
// fraction convergents and the final semiconvergent; comparisons are exact
// against the dyadic value of the double.
mpq_class best_rational(double x, long maxden) {
    if (x <= 0) return 0;
    if (x >= 1) return 1;
    mpq_class target(x);
    mpz_class p0 = 1, q0 = 0, p1, q1;  // previous two convergents
    {
        mpq_class v = target;
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        p1 = a;
        q1 = 1;
        mpq_class rem = v - mpq_class(a);
        while (rem != 0) {
            v = 1 / rem;
            mpz_fdiv_q(a.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
            mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
            if (q2 > maxden) {
                // furthest admissible semiconvergent
                mpz_class k = (mpz_class(maxden) - q0) / q1;
                mpz_class ps = k * p1 + p0, qs = k * q1 + q0;
                mpq_class conv(p1, q1), semi(ps, qs);
                conv.canonicalize();
                semi.canonicalize();
                return abs(semi - target) < abs(conv - target) ? semi : conv;
            }
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
            rem = v - mpq_class(a);
        }
        mpq_class exact(p1, q1);
        exact.canonicalize();
        return exact;
    }
}

std::vector<mpq_class> round_to_simplex(const std::vector<double>& x, long maxden) {
    std::vector<mpq_class> alpha;
    alpha.reserve(x.size());
    mpq_class sum = 0;
    for (double xi : x) {
        alpha.push_back(best_rational(xi, maxden));
        sum += alpha.back();
    }
    // absorb the rounding defect into the largest coordinate
    std::size_t big = 0;
    for (std::size_t i = 1; i < alpha.size(); ++i)
        if (alpha[i] > alpha[big]) big = i;
    alpha[big] += 1 - sum;
    if (alpha[big] < 0) {
        // fall back to plain grid rounding
        sum = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            alpha[i] = mpq_class(static_cast<long>(std::lround(x[i] * maxden)), maxden);
            alpha[i].canonicalize();
            sum += alpha[i];
        }
        alpha[big] += 1 - sum;
    }
    return alpha;
}

std::vector<double> ascend(const DensityPolynomial& poly, std::vector<double> x) {
    const double tol = 1e-10;
    double fx = evaluate_double(poly, x);
    for (int iter = 0; iter < 10000; ++iter) {
        std::vector<double> g = gradient(poly, x);
        double step = 1.0;
        bool moved = false;
        while (step > 1e-16) {
            std::vector<double> cand(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) cand[i] = x[i] + step * g[i];
            cand = project_simplex(std::move(cand));
            double fc = evaluate_double(poly, cand);
            if (fc > fx) {
                double move = 0;
                for (std::size_t i = 0; i < x.size(); ++i)
                    move += (cand[i] - x[i]) * (cand[i] - x[i]);
                x = std::move(cand);
                fx = fc;
                moved = true;
                if (std::sqrt(move) / step < tol) return x;
                break;
            }
            step *= 0.5;
        }
        if (!moved) {
            // projected-gradient norm at a fixed probe step
            const double h = 1e-8;
            std::vector<double> probe(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) probe[i] = x[i] + h * g[i];
            probe = project_simplex(std::move(probe));
            double norm = 0;
            for (std::size_t i = 0; i < x.size(); ++i)
                norm += (probe[i] - x[i]) * (probe[i] - x[i]);
            if (std::sqrt(norm) / h < tol) return x;
            return x;  // no ascent direction left at float precision
        }
    }
    return x;
}

}  // namespace

DensityMaximum max_partite_density(const PatternWithDemands& pattern,
                                   int parts_count) {
    if (parts_count < 1)
        throw std::invalid_argument("max_partite_density: parts_count >= 1 required");
    DensityPolynomial poly = density_polynomial(pattern, complete(parts_count));
    const int k = parts_count;

    std::vector<std::vector<double>> starts;
    starts.emplace_back(k, 1.0 / k);
    for (int i = 0; i < k; ++i) {
        std::vector<double> s(k, k == 1 ? 0.0 : 0.3 / (k - 1));
        s[i] = k == 1 ? 1.0 : 0.7;
        starts.push_back(std::move(s));
    }
    std::mt19937 rng(20240613u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 8; ++t) {
        std::vector<double> s(k);
        double tot = 0;
        for (double& v : s) {
            v = -std::log(std::max(unit(rng), 1e-12));
            tot += v;
        }
        for (double& v : s) v /= tot;
        starts.push_back(std::move(s));
    }

    DensityMaximum best;
    best.value = -1;
    for (const auto& start : starts) {
        std::vector<double> x = ascend(poly, start);
        std::vector<mpq_class> alpha = round_to_simplex(x, 10000);
        mpq_class value = evaluate(poly, alpha);
        if (value > best.value) {
            best.value = value;
            best.alpha = std::move(alpha);
        }
    }
    return best;
}

FiniteComparison finite_comparison(int r, int a, const mpq_class& eps,
                                   long long n) {
    EndpointedPattern g = build_G(r, a);
    WeightedGraph s = build_S_spec(r, n, eps);
    FiniteComparison cmp;
    cmp.n = n;
    cmp.count_in_s = count_in_blowup(g.pattern, s);
    PartiteMaximum pm = max_partite_exact(g.pattern, r - 1, n);
    cmp.partite_max = pm.value;
    cmp.partite_argmax = pm.parts;
    return cmp;
}

CounterexampleReport verify_counterexample(const TheoremParams& params,
                                           const std::vector<long long>& finite_ns) {
    if (auto violated = check_params(params))
        throw std::invalid_argument("verify_counterexample: " + *violated);
    const int r = params.r, a = params.a;

    CounterexampleReport report;
    report.params = params;

    EndpointedPattern g = build_G(r, a);
    QuotientGraph q = build_Q(r);
    Graph expanded = expand(g.pattern);

    auto diam = diameter(expanded);
    report.structural.emplace_back("diameter_equals_2", diam && *diam == 2);
    report.structural.emplace_back("chromatic_number_equals_r_minus_1",
                                   chromatic_number(expanded) == r - 1);

    ColoringSummary coloring =
        count_proper_colorings_as_partitions(expanded, r - 1);
    bool unique = coloring.count_partitions == 1;
    report.structural.emplace_back("unique_r_minus_1_coloring", unique);

    // expansion layout: clones of base vertex b start at sum of demands < b
    bool endpoints_ok = false;
    if (!coloring.witness.empty()) {
        auto class_of = [&](int v) {
            for (std::size_t c = 0; c < coloring.witness.size(); ++c)
                for (int u : coloring.witness[c])
                    if (u == v) return static_cast<int>(c);
            return -1;
        };
        int start_x = 0, start_y = 0, acc = 0;
        for (int b = 0; b < g.pattern.base.order(); ++b) {
            if (b == g.x) start_x = acc;
            if (b == g.y) start_y = acc;
            acc += g.pattern.demands[b];
        }
        int cx = class_of(start_x), cy = class_of(start_y);
        endpoints_ok = cx >= 0 && cy >= 0 && cx != cy;
        for (int i = 1; i < a && endpoints_ok; ++i)
            endpoints_ok = class_of(start_x + i) == cx && class_of(start_y + i) == cy;
    }
    report.structural.emplace_back("endpoint_classes_monochromatic_distinct",
                                   endpoints_ok);

    report.structural.emplace_back("quotient_clique_equals_r_minus_1",
                                   clique_number(q.graph) == r - 1);

    // smallest n with floor(eps*n) >= 1; K_r-freeness only depends on the quotient
    long long n0;
    {
        mpz_class num = params.eps.get_num(), den = params.eps.get_den();
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
        n0 = c.get_si();
        if (n0 <= static_cast<long long>(r + 1)) n0 = r + 2;
    }
    report.structural.emplace_back(
        "s_spec_is_kr_free", is_kr_free_blowup(build_S_spec(r, n0, params.eps), r));

    DensityPolynomial poly = density_polynomial(g.pattern, q.graph);
    std::vector<mpq_class> alpha(q.graph.order(), params.eps);
    alpha[q.z] = 1 - params.eps * (r + 1);
    report.density_s = evaluate(poly, alpha);

    report.density_partite_upper =
        rational_pow(mpq_class(1, 2), static_cast<unsigned long>(2 * a));
    DensityMaximum found = max_partite_density(g.pattern, r - 1);
    report.density_partite_best_found = found.value;

    for (long long n : finite_ns)
        report.finite_n.push_back(finite_comparison(r, a, params.eps, n));

    bool structural_ok = true;
    for (const auto& [name, ok] : report.structural) structural_ok &= ok;
    mpq_class lhs = params.delta * report.density_s;
    report.verdict = structural_ok && lhs > report.density_partite_upper &&
                     lhs > report.density_partite_best_found;
    return report;
}

}  // namespace turan
