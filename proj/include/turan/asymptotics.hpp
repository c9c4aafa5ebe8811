#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Leading coefficient of the labelled count of a pattern in a blow-up of
// `base` when part sizes scale as alpha_b * n: a multivariate polynomial in
// the part fractions, one variable per base vertex, with exact rational
// coefficients. Every term has total degree equal to the expanded pattern
// order.
struct DensityPolynomial {
    int vars = 0;
    int degree = 0;
    std::map<std::vector<int>, mpq_class> terms;
};

DensityPolynomial density_polynomial(const PatternWithDemands& pattern,
                                     const Graph& base);

mpq_class evaluate(const DensityPolynomial& poly,
                   const std::vector<mpq_class>& alpha);

// float shadow of evaluate/gradient, for the simplex optimizer only
double evaluate_double(const DensityPolynomial& poly,
                       const std::vector<double>& alpha);
std::vector<double> gradient(const DensityPolynomial& poly,
                             const std::vector<double>& alpha);

// n^(r+1) * (n/2)^(2a), kept rational so odd n needs no flooring.
mpq_class paper_upper_bound(long long n, int r, int a);

// floor(eps*n)^(r+1) * (n - (r+1)*floor(eps*n))^(2a); rejects floor(eps*n)=0.
mpz_class paper_lower_bound(long long n, int r, int a, const mpq_class& eps);

struct TheoremParams {
    int r = 4;
    mpq_class delta = 1;  // in (0, 1]
    mpq_class eps;        // 0 < eps < 1/(100(r+1))
    int a = 1;
};

// Description of the first violated parameter constraint, or nullopt.
std::optional<std::string> check_params(const TheoremParams& params);

// (1/2) * delta * eps^(r+1) * (1 - eps(r+1))^(2a) >= (1/2)^(2a),
// decided in exact rational arithmetic.
bool feasibility(const TheoremParams& params);

// Least a >= 1 making the inequality hold, by incremental exact scan.
int minimal_a(int r, const mpq_class& delta, const mpq_class& eps);

mpz_class floor_product(const mpq_class& eps, long long n);  // floor(eps*n)
mpq_class rational_pow(const mpq_class& base, unsigned long e);

}  // namespace turan
