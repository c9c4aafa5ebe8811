#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "turan/asymptotics.hpp"
#include "turan/graph.hpp"

namespace turan {

// Graph with two marked endvertices (the blow-up targets).
struct EndpointedGraph {
    Graph graph;
    int x = -1;
    int y = -1;
};

// Pattern with the two demand-a classes marked.
struct EndpointedPattern {
    PatternWithDemands pattern;
    int x = -1;
    int y = -1;
};

// Graph with the marked contraction vertex z.
struct QuotientGraph {
    Graph graph;
    int z = -1;
};

// H = K_{r-3} joined to P_6; x, y are the path endpoints. Requires r >= 4.
EndpointedGraph build_H(int r);

// G: H with both path endpoints blown up by a (as demands).
EndpointedPattern build_G(int r, int a);

// Q = K_{r-3} joined to C_5; equals H with x and y contracted to z.
// z sits at the first cycle vertex (index r-3).
QuotientGraph build_Q(int r);

// S: blow-up of Q with weight n - (r+1)*floor(eps*n) on z and
// floor(eps*n) on the other r+1 vertices. Rejects degenerate weights.
WeightedGraph build_S_spec(int r, long long n, const mpq_class& eps);

// The (r-2)-th power of the path on 2r vertices, endpoints marked; the
// blow-up factor for the endpoints is left to the caller. Requires r >= 3.
EndpointedGraph build_power_path_base(int r);

struct PartiteMaximum {
    mpz_class value;
    std::vector<long long> parts;  // non-increasing
};

// Exhaustive maximum of the labelled count over complete multipartite hosts
// with parts_count parts summing to n. Restricting to complete multipartite
// graphs is justified by edge-monotonicity of embedding counts.
PartiteMaximum max_partite_exact(const PatternWithDemands& pattern,
                                 int parts_count, long long n);

struct DensityMaximum {
    mpq_class value;               // exact value at the rounded point
    std::vector<mpq_class> alpha;  // rational point on the simplex
};

// Multi-start projected gradient ascent of the density polynomial over the
// simplex; floats locate a candidate, which is rounded to a rational point
// (denominators <= 10^4) and certified by exact evaluation. The result is a
// certified lower bound on the true maximum. Deterministic.
DensityMaximum max_partite_density(const PatternWithDemands& pattern,
                                   int parts_count);

struct FiniteComparison {
    long long n = 0;
    mpz_class count_in_s;
    mpz_class partite_max;
    std::vector<long long> partite_argmax;
};

struct CounterexampleReport {
    TheoremParams params;
    std::vector<std::pair<std::string, bool>> structural;
    mpq_class density_s;
    mpq_class density_partite_upper;       // (1/2)^(2a), gated on uniqueness
    mpq_class density_partite_best_found;  // optimizer output, certified
    std::vector<FiniteComparison> finite_n;
    bool verdict = false;
};

// Exact count comparison at one finite n: the blow-up construction S versus
// the best complete (r-1)-partite host. Recorded, never asserted; small n
// need not exhibit the asymptotic win.
FiniteComparison finite_comparison(int r, int a, const mpq_class& eps,
                                   long long n);

// End-to-end certificate: structural checks, exact leading-coefficient
// densities, and the verdict
//   all structural AND delta*density_s > upper AND delta*density_s > best.
// Throws std::invalid_argument naming the violated constraint when the
// parameters are infeasible.
CounterexampleReport verify_counterexample(const TheoremParams& params,
                                           const std::vector<long long>& finite_ns);

}  // namespace turan
