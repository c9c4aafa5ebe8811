#pragma once

#include <gmpxx.h>

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "turan/asymptotics.hpp"
#include "turan/counting.hpp"
#include "turan/extremal.hpp"
#include "turan/graph.hpp"

namespace turan {

// Graph JSON: {"n": int, "edges": [[u,v],...]} with u < v, pairs sorted
// lexicographically. Weighted graphs add "weights", patterns add "demands".
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json weighted_to_json(const WeightedGraph& w);
WeightedGraph weighted_from_json(const nlohmann::json& j);

nlohmann::json pattern_to_json(const PatternWithDemands& p);
PatternWithDemands pattern_from_json(const nlohmann::json& j);

// graph6 ingest (bit-packed upper triangle, de-facto standard)
Graph graph_from_graph6(const std::string& text);

// Undirected DOT with vertex ids 0..n-1; per-vertex weights, when given,
// become labels and scale the node size (the heavy part is drawn larger).
std::string graph_to_dot(const Graph& g,
                         const std::vector<long long>* weights = nullptr);

nlohmann::json count_result_to_json(const CountResult& r);

// {"vars": k, "terms": [{"exp": [...], "num": "...", "den": "..."}]}
nlohmann::json polynomial_to_json(const DensityPolynomial& poly);
DensityPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CounterexampleReport& report);

// "p/q" or plain integer string; q > 0 enforced, result canonicalized
mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& q);
std::string rational_to_decimal(const mpq_class& q);  // for human columns

}  // namespace turan
