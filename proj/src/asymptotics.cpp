#include "turan/asymptotics.hpp"

#include <stdexcept>

#include "turan/counting.hpp"

namespace turan {

mpq_class rational_pow(const mpq_class& base, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

mpz_class floor_product(const mpq_class& eps, long long n) {
    mpq_class p = eps * mpq_class(static_cast<long>(n));
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
    return f;
}

namespace {

struct DensityBuilder {
    const Graph& base;
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<bool>> class_adj;
    std::vector<int> loads;
    std::vector<std::vector<int>> parts_used;
    std::map<std::vector<int>, mpq_class> terms;

    DensityBuilder(const Graph& expanded_pattern, const Graph& host_base)
        : base(host_base), classes(false_twin_classes(expanded_pattern)),
          loads(host_base.order(), 0), parts_used(classes.size()) {
        const int t = static_cast<int>(classes.size());
        class_adj.assign(t, std::vector<bool>(t, false));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                if (i != j &&
                    expanded_pattern.adjacent(classes[i].front(), classes[j].front()))
                    class_adj[i][j] = true;
    }

    void place_class(int cls, const mpz_class& coeff) {
        if (cls == static_cast<int>(classes.size())) {
            terms[loads] += mpq_class(coeff);
            return;
        }
        std::vector<int> adm;
        for (int b = 0; b < base.order(); ++b) {
            bool ok = true;
            for (int j = 0; j < cls && ok; ++j) {
                if (!class_adj[cls][j]) continue;
                for (int pb : parts_used[j])
                    if (pb == b || !base.adjacent(pb, b)) { ok = false; break; }
            }
            if (ok) adm.push_back(b);
        }
        parts_used[cls].clear();
        distribute(cls, adm, 0, static_cast<int>(classes[cls].size()), coeff);
        parts_used[cls].clear();
    }

    void distribute(int cls, const std::vector<int>& adm, std::size_t idx,
                    int remaining, const mpz_class& coeff) {
        if (idx == adm.size()) {
            if (remaining == 0) place_class(cls + 1, coeff);
            return;
        }
        int b = adm[idx];
        for (int x = 0; x <= remaining; ++x) {
            mpz_class next = coeff;
            if (x > 0) {
                mpz_class choose;
                mpz_bin_uiui(choose.get_mpz_t(),
                             static_cast<unsigned long>(remaining),
                             static_cast<unsigned long>(x));
                next *= choose;
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

DensityPolynomial density_polynomial(const PatternWithDemands& pattern,
                                     const Graph& base) {
    Graph expanded = expand(pattern);
    DensityPolynomial poly;
    poly.vars = base.order();
    poly.degree = expanded.order();
    if (expanded.order() == 0) {
        poly.terms[std::vector<int>(base.order(), 0)] = 1;
        return poly;
    }
    DensityBuilder builder(expanded, base);
    builder.place_class(0, 1);
    poly.terms = std::move(builder.terms);
    return poly;
}

mpq_class evaluate(const DensityPolynomial& poly,
                   const std::vector<mpq_class>& alpha) {
    if (static_cast<int>(alpha.size()) != poly.vars)
        throw std::invalid_argument("evaluate: alpha length mismatch");
    mpq_class total = 0;
    for (const auto& [exps, coeff] : poly.terms) {
        mpq_class term = coeff;
        for (int b = 0; b < poly.vars; ++b)
            if (exps[b] > 0)
                term *= rational_pow(alpha[b], static_cast<unsigned long>(exps[b]));
        total += term;
    }
    return total;
}

double evaluate_double(const DensityPolynomial& poly,
                       const std::vector<double>& alpha) {
    if (static_cast<int>(alpha.size()) != poly.vars)
        throw std::invalid_argument("evaluate_double: alpha length mismatch");
    double total = 0;
    for (const auto& [exps, coeff] : poly.terms) {
        double term = coeff.get_d();
        for (int b = 0; b < poly.vars; ++b)
            for (int e = 0; e < exps[b]; ++e) term *= alpha[b];
        total += term;
    }
    return total;
}

std::vector<double> gradient(const DensityPolynomial& poly,
                             const std::vector<double>& alpha) {
    if (static_cast<int>(alpha.size()) != poly.vars)
        throw std::invalid_argument("gradient: alpha length mismatch");
    std::vector<double> grad(poly.vars, 0.0);
    for (const auto& [exps, coeff] : poly.terms) {
        double c = coeff.get_d();
        for (int b = 0; b < poly.vars; ++b) {
            if (exps[b] == 0) continue;
            double term = c * exps[b];
            for (int j = 0; j < poly.vars; ++j) {
                int e = exps[j] - (j == b ? 1 : 0);
                for (int i = 0; i < e; ++i) term *= alpha[j];
            }
            grad[b] += term;
        }
    }
    return grad;
}

mpq_class paper_upper_bound(long long n, int r, int a) {
    if (n < 1) throw std::invalid_argument("paper_upper_bound: n must be positive");
    mpq_class nn(static_cast<long>(n));
    return rational_pow(nn, static_cast<unsigned long>(r + 1)) *
           rational_pow(nn / 2, static_cast<unsigned long>(2 * a));
}

mpz_class paper_lower_bound(long long n, int r, int a, const mpq_class& eps) {
    mpz_class f = floor_product(eps, n);
    if (f < 1)
        throw std::invalid_argument("paper_lower_bound: floor(eps*n) must be >= 1");
    mpz_class head, tail;
    mpz_pow_ui(head.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(r + 1));
    mpz_class base = mpz_class(static_cast<long>(n)) - mpz_class(r + 1) * f;
    mpz_pow_ui(tail.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(2 * a));
    return head * tail;
}

std::optional<std::string> check_params(const TheoremParams& p) {
    if (p.r < 4) return "r >= 4 required";
    if (p.delta <= 0 || p.delta > 1) return "delta must lie in (0, 1]";
    if (p.eps <= 0) return "eps must be positive";
    if (p.eps >= mpq_class(1, 100 * (p.r + 1)))
        return "eps < 1/(100(r+1)) required";
    if (p.a < 1) return "a must be a positive integer";
    if (!feasibility(p))
        return "(1/2) delta eps^(r+1) (1-eps(r+1))^(2a) >= (1/2)^(2a) violated";
    return std::nullopt;
}

bool feasibility(const TheoremParams& p) {
    mpq_class lhs = mpq_class(1, 2) * p.delta *
                    rational_pow(p.eps, static_cast<unsigned long>(p.r + 1)) *
                    rational_pow(1 - p.eps * (p.r + 1),
                                 static_cast<unsigned long>(2 * p.a));
    mpq_class rhs = rational_pow(mpq_class(1, 2),
                                 static_cast<unsigned long>(2 * p.a));
    return lhs >= rhs;
}

int minimal_a(int r, const mpq_class& delta, const mpq_class& eps) {
    mpq_class q = 1 - eps * (r + 1);
    if (q <= mpq_class(1, 2))
        throw std::domain_error("minimal_a: 1 - eps(r+1) > 1/2 required");
    // condition <=> (1/2) delta eps^(r+1) * (4 q^2)^a >= 1, and 4q^2 > 1
    mpq_class value = mpq_class(1, 2) * delta *
                      rational_pow(eps, static_cast<unsigned long>(r + 1));
    mpq_class factor = 4 * q * q;
    int a = 0;
    do {
        ++a;
        value *= factor;
    } while (value < 1);
    return a;
}

}  // namespace turan
