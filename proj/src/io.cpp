#include "turan/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace turan {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.order();
    j["edges"] = json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edge must be a pair");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(es));
}

json weighted_to_json(const WeightedGraph& w) {
    json j = graph_to_json(w.base);
    j["weights"] = w.weights;
    return j;
}

WeightedGraph weighted_from_json(const json& j) {
    return WeightedGraph(graph_from_json(j),
                         j.at("weights").get<std::vector<long long>>());
}

json pattern_to_json(const PatternWithDemands& p) {
    json j = graph_to_json(p.base);
    j["demands"] = p.demands;
    return j;
}

PatternWithDemands pattern_from_json(const json& j) {
    std::vector<int> demands;
    if (j.contains("demands"))
        demands = j.at("demands").get<std::vector<int>>();
    else
        demands.assign(j.at("n").get<int>(), 1);
    return PatternWithDemands(graph_from_json(j), std::move(demands));
}

Graph graph_from_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    std::size_t pos = 0;
    long long n;
    if (s[0] != 126) {
        n = s[0] - 63;
        pos = 1;
    } else if (s.size() >= 4 && s[1] != 126) {
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
        pos = 4;
    } else {
        throw std::invalid_argument("graph6: unsupported size encoding");
    }
    if (n < 0 || n > 100000) throw std::invalid_argument("graph6: bad order");
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) < nbytes)
        throw std::invalid_argument("graph6: truncated input");
    std::vector<std::pair<int, int>> es;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int c = s[pos + bit / 6] - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad character");
            if ((c >> (5 - bit % 6)) & 1) es.emplace_back(u, v);
        }
    }
    return Graph(static_cast<int>(n), std::move(es));
}

std::string graph_to_dot(const Graph& g, const std::vector<long long>* weights) {
    std::ostringstream out;
    out << "graph {\n  node [shape=circle];\n";
    long long wmax = 1;
    if (weights)
        for (long long w : *weights) wmax = std::max(wmax, w);
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (weights) {
            double width = 0.5 + 1.0 * static_cast<double>((*weights)[v]) /
                                     static_cast<double>(wmax);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.2f", width);
            out << " [label=\"" << v << " (w=" << (*weights)[v]
                << ")\", width=" << buf << ", fixedsize=true]";
        }
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

json count_result_to_json(const CountResult& r) {
    json j;
    j["labelled"] = r.labelled.get_str();
    j["aut"] = r.aut.get_str();
    j["unlabelled"] = r.unlabelled.get_str();
    return j;
}

json polynomial_to_json(const DensityPolynomial& poly) {
    json j;
    j["vars"] = poly.vars;
    j["terms"] = json::array();
    for (const auto& [exps, coeff] : poly.terms) {
        json term;
        term["exp"] = exps;
        term["num"] = coeff.get_num().get_str();
        term["den"] = coeff.get_den().get_str();
        j["terms"].push_back(std::move(term));
    }
    return j;
}

DensityPolynomial polynomial_from_json(const json& j) {
    DensityPolynomial poly;
    poly.vars = j.at("vars").get<int>();
    for (const auto& term : j.at("terms")) {
        auto exps = term.at("exp").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != poly.vars)
            throw std::invalid_argument("polynomial json: exponent length mismatch");
        mpq_class coeff(mpz_class(term.at("num").get<std::string>()),
                        mpz_class(term.at("den").get<std::string>()));
        coeff.canonicalize();
        int deg = 0;
        for (int e : exps) deg += e;
        poly.degree = std::max(poly.degree, deg);
        poly.terms[exps] = coeff;
    }
    return poly;
}

namespace {

json rational_json(const mpq_class& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

}  // namespace

json report_to_json(const CounterexampleReport& report) {
    json j;
    j["params"] = {{"r", report.params.r},
                   {"delta", rational_json(report.params.delta)},
                   {"eps", rational_json(report.params.eps)},
                   {"a", report.params.a}};
    j["structural"] = json::object();
    for (const auto& [name, ok] : report.structural) j["structural"][name] = ok;
    j["density_S"] = rational_json(report.density_s);
    j["density_partite_upper"] = rational_json(report.density_partite_upper);
    j["density_partite_best_found"] =
        rational_json(report.density_partite_best_found);
    j["finite_n"] = json::array();
    for (const auto& cmp : report.finite_n) {
        json row;
        row["n"] = cmp.n;
        row["count_in_S"] = cmp.count_in_s.get_str();
        row["partite_max"] = cmp.partite_max.get_str();
        row["partite_argmax"] = cmp.partite_argmax;
        j["finite_n"].push_back(std::move(row));
    }
    j["verdict"] = report.verdict;
    return j;
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' ||
              c == '+'))
            throw std::invalid_argument("rational: bad character in '" + text + "'");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) {
    return q.get_str();
}

std::string rational_to_decimal(const mpq_class& q) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", q.get_d());
    return buf;
}

}  // namespace turan
