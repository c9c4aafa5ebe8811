// Command-line surface for the exact generalized-Turán toolkit: graph
// construction, structural predicates, exact copy counting, density
// polynomials, simplex optimization, the counterexample certificate, and
// parameter scans.
//
// Exit codes: 0 success / verdict true, 1 usage or parse error,
// 2 verdict false or infeasible parameters.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "turan/asymptotics.hpp"
#include "turan/counting.hpp"
#include "turan/extremal.hpp"
#include "turan/io.hpp"
#include "turan/props.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefuted = 2;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

// JSON when the payload starts with '{', graph6 otherwise
turan::Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return turan::graph_from_json(json::parse(text));
    return turan::graph_from_graph6(text);
}

turan::PatternWithDemands load_pattern(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return turan::pattern_from_json(json::parse(text));
    turan::Graph g = turan::graph_from_graph6(text);
    return turan::PatternWithDemands(g, std::vector<int>(g.order(), 1));
}

std::vector<long long> parse_parts(const std::string& text) {
    std::vector<long long> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(std::stoll(item));
    return parts;
}

int cmd_construct(const std::string& name, int r, int a, long long n,
                  const std::string& eps_text, const std::string& out,
                  const std::string& dot_path) {
    json j;
    std::optional<std::string> dot;
    if (name == "H") {
        auto h = turan::build_H(r);
        j = turan::graph_to_json(h.graph);
        j["x"] = h.x;
        j["y"] = h.y;
        dot = turan::graph_to_dot(h.graph);
    } else if (name == "G") {
        auto g = turan::build_G(r, a);
        j = turan::pattern_to_json(g.pattern);
        j["x"] = g.x;
        j["y"] = g.y;
        dot = turan::graph_to_dot(turan::expand(g.pattern));
    } else if (name == "Q") {
        auto q = turan::build_Q(r);
        j = turan::graph_to_json(q.graph);
        j["z"] = q.z;
        dot = turan::graph_to_dot(q.graph);
    } else if (name == "S") {
        auto s = turan::build_S_spec(r, n, turan::parse_rational(eps_text));
        j = turan::weighted_to_json(s);
        dot = turan::graph_to_dot(s.base, &s.weights);
    } else if (name == "powerpath") {
        auto p = turan::build_power_path_base(r);
        j = turan::graph_to_json(p.graph);
        j["x"] = p.x;
        j["y"] = p.y;
        dot = turan::graph_to_dot(p.graph);
    } else {
        std::cerr << "unknown construction '" << name << "'\n";
        return kExitUsage;
    }
    write_file(out, j.dump(2) + "\n");
    if (!dot_path.empty()) write_file(dot_path, *dot);
    return kExitOk;
}

int cmd_props(const std::string& in) {
    turan::Graph g = load_graph(in);
    json j;
    auto diam = turan::diameter(g);
    if (diam)
        j["diameter"] = *diam;
    else
        j["diameter"] = "inf";
    j["chromatic_number"] = turan::chromatic_number(g);
    j["clique_number"] = turan::clique_number(g);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_count(const std::string& pattern_path, const std::string& host_path,
              const std::string& parts_text, const std::string& out) {
    turan::PatternWithDemands pattern = load_pattern(pattern_path);
    if (pattern.base.order() == 0) {
        std::cerr << "count: pattern must be nonempty\n";
        return kExitUsage;
    }
    auto finish = [](turan::CountResult& r) {
        mpz_class rem;
        mpz_fdiv_qr(r.unlabelled.get_mpz_t(), rem.get_mpz_t(),
                    r.labelled.get_mpz_t(), r.aut.get_mpz_t());
        if (rem != 0)
            throw std::logic_error("labelled count not divisible by |Aut|");
    };
    turan::CountResult result;
    if (!parts_text.empty()) {
        result.labelled =
            turan::count_in_complete_multipartite(pattern, parse_parts(parts_text));
        result.aut = turan::automorphism_count(turan::expand(pattern));
        finish(result);
    } else {
        std::string host_text = read_file(host_path);
        auto first = host_text.find_first_not_of(" \t\r\n");
        bool is_json = first != std::string::npos && host_text[first] == '{';
        json hj = is_json ? json::parse(host_text) : json();
        if (is_json && hj.contains("weights")) {
            result.labelled =
                turan::count_in_blowup(pattern, turan::weighted_from_json(hj));
            result.aut = turan::automorphism_count(turan::expand(pattern));
            finish(result);
        } else {
            turan::Graph host = is_json ? turan::graph_from_json(hj)
                                        : turan::graph_from_graph6(host_text);
            result = turan::count_copies(turan::expand(pattern), host);
        }
    }
    write_file(out, turan::count_result_to_json(result).dump(2) + "\n");
    return kExitOk;
}

int cmd_density(const std::string& pattern_path, const std::string& base_path,
                const std::string& out) {
    turan::PatternWithDemands pattern = load_pattern(pattern_path);
    turan::Graph base = load_graph(base_path);
    auto poly = turan::density_polynomial(pattern, base);
    write_file(out, turan::polynomial_to_json(poly).dump(2) + "\n");
    return kExitOk;
}

int cmd_optimize(const std::string& pattern_path, int parts_count,
                 const std::string& out) {
    turan::PatternWithDemands pattern = load_pattern(pattern_path);
    auto best = turan::max_partite_density(pattern, parts_count);
    json j;
    j["value"] = {{"num", best.value.get_num().get_str()},
                  {"den", best.value.get_den().get_str()}};
    j["value_decimal"] = turan::rational_to_decimal(best.value);
    j["alpha"] = json::array();
    for (const auto& a : best.alpha) j["alpha"].push_back(turan::rational_to_string(a));
    write_file(out, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_verify(int r, const std::string& delta_text, const std::string& eps_text,
               const std::string& a_text, const std::string& finite_text,
               const std::string& out) {
    turan::TheoremParams params;
    params.r = r;
    params.delta = turan::parse_rational(delta_text);
    params.eps = turan::parse_rational(eps_text);
    if (a_text == "auto") {
        params.a = turan::minimal_a(r, params.delta, params.eps);
    } else {
        params.a = std::stoi(a_text);
    }
    std::vector<long long> finite_ns = parse_parts(finite_text);

    turan::CounterexampleReport report;
    try {
        report = turan::verify_counterexample(params, finite_ns);
    } catch (const std::invalid_argument& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitRefuted;
    }
    write_file(out, turan::report_to_json(report).dump(2) + "\n");

    std::cerr << "r=" << params.r << " a=" << params.a
              << " eps=" << turan::rational_to_string(params.eps)
              << " delta=" << turan::rational_to_string(params.delta) << "\n";
    for (const auto& [name, ok] : report.structural)
        std::cerr << "  " << name << ": " << (ok ? "ok" : "FAILED") << "\n";
    std::cerr << "  density_S = " << turan::rational_to_decimal(report.density_s)
              << "\n  partite upper bound = "
              << turan::rational_to_decimal(report.density_partite_upper)
              << "\n  partite best found = "
              << turan::rational_to_decimal(report.density_partite_best_found)
              << "\n  verdict: " << (report.verdict ? "counterexample certified" : "NOT certified")
              << "\n";
    return report.verdict ? kExitOk : kExitRefuted;
}

int cmd_scan(int r, const std::string& delta_text, const std::string& eps_grid,
             int a_min, int a_max, const std::string& out) {
    mpq_class delta = turan::parse_rational(delta_text);
    std::vector<std::string> eps_items;
    {
        std::stringstream ss(eps_grid);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) eps_items.push_back(item);
    }
    std::ostringstream csv;
    csv << "r,delta,eps,a,feasible,density_S,density_S_decimal,"
           "partite_upper,partite_upper_decimal,ratio,ratio_decimal\n";
    for (const auto& eps_text : eps_items) {
        mpq_class eps = turan::parse_rational(eps_text);
        bool constraint_ok = eps > 0 && eps < mpq_class(1, 100 * (r + 1));
        for (int a = a_min; a <= a_max; ++a) {
            csv << r << "," << turan::rational_to_string(delta) << ","
                << turan::rational_to_string(eps) << "," << a << ",";
            if (!constraint_ok) {
                csv << "constraint_violated,,,,,,\n";
                continue;
            }
            turan::TheoremParams p{r, delta, eps, a};
            bool feas = turan::feasibility(p);
            auto g = turan::build_G(r, a);
            auto q = turan::build_Q(r);
            auto poly = turan::density_polynomial(g.pattern, q.graph);
            std::vector<mpq_class> alpha(q.graph.order(), eps);
            alpha[q.z] = 1 - eps * (r + 1);
            mpq_class density_s = turan::evaluate(poly, alpha);
            mpq_class upper =
                turan::rational_pow(mpq_class(1, 2), static_cast<unsigned long>(2 * a));
            mpq_class ratio = delta * density_s / upper;
            csv << (feas ? "true" : "false") << ","
                << turan::rational_to_string(density_s) << ","
                << turan::rational_to_decimal(density_s) << ","
                << turan::rational_to_string(upper) << ","
                << turan::rational_to_decimal(upper) << ","
                << turan::rational_to_string(ratio) << ","
                << turan::rational_to_decimal(ratio) << "\n";
        }
    }
    write_file(out, csv.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for generalized Turán constructions: blow-up "
                 "counting, structural predicates, and the complete-multipartite "
                 "counterexample certificate"};
    app.require_subcommand(1);

    std::string name, out = "-", dot_path, eps_text = "1/1000", delta_text = "1";
    std::string pattern_path, host_path, base_path, parts_text, a_text = "1";
    std::string finite_text, eps_grid;
    int r = 4, a = 1, parts_count = 3, a_min = 1, a_max = 1;
    long long n = 0;

    auto* construct = app.add_subcommand("construct", "emit a named construction");
    construct->add_option("name", name, "one of H|G|Q|S|powerpath")->required();
    construct->add_option("--r", r, "clique parameter r")->required();
    construct->add_option("--a", a, "endpoint blow-up factor (G)");
    construct->add_option("--n", n, "order of S");
    construct->add_option("--eps", eps_text, "epsilon as p/q (S)");
    construct->add_option("--out,-o", out, "output path, '-' for stdout");
    construct->add_option("--dot", dot_path, "also write DOT here");

    auto* props = app.add_subcommand("props", "diameter, chromatic and clique number");
    props->add_option("--in,-i", host_path, "graph file (JSON or graph6)")->required();

    auto* count = app.add_subcommand("count", "exact copy counts");
    count->add_option("--pattern,-p", pattern_path, "pattern file")->required();
    count->add_option("--host", host_path, "host graph file");
    count->add_option("--parts", parts_text, "complete multipartite part sizes, e.g. 3,3,3");
    count->add_option("--out,-o", out, "output path");

    auto* density = app.add_subcommand("density", "density polynomial of a pattern in a blow-up");
    density->add_option("--pattern,-p", pattern_path, "pattern file")->required();
    density->add_option("--base,-b", base_path, "blow-up base graph file")->required();
    density->add_option("--out,-o", out, "output path");

    auto* optimize = app.add_subcommand("optimize", "maximize density over the simplex");
    optimize->add_option("--pattern,-p", pattern_path, "pattern file")->required();
    optimize->add_option("--parts-count,-k", parts_count, "number of parts")->required();
    optimize->add_option("--out,-o", out, "output path");

    auto* verify = app.add_subcommand("verify", "counterexample certificate");
    verify->add_option("--r", r, "clique parameter r")->required();
    verify->add_option("--delta", delta_text, "delta as p/q");
    verify->add_option("--eps", eps_text, "epsilon as p/q");
    verify->add_option("--a", a_text, "blow-up factor, or 'auto'");
    verify->add_option("--finite-n", finite_text, "comma list of exact-count orders");
    verify->add_option("--out,-o", out, "report path");

    auto* scan = app.add_subcommand("scan", "feasibility/density grid as CSV");
    scan->add_option("--r", r, "clique parameter r")->required();
    scan->add_option("--delta", delta_text, "delta as p/q");
    scan->add_option("--eps-grid", eps_grid, "comma list of epsilons")->required();
    scan->add_option("--a-min", a_min, "smallest a");
    scan->add_option("--a-max", a_max, "largest a");
    scan->add_option("--out,-o", out, "CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed())
            return cmd_construct(name, r, a, n, eps_text, out, dot_path);
        if (props->parsed()) return cmd_props(host_path);
        if (count->parsed()) {
            if (host_path.empty() == parts_text.empty()) {
                std::cerr << "count: exactly one of --host / --parts required\n";
                return kExitUsage;
            }
            return cmd_count(pattern_path, host_path, parts_text, out);
        }
        if (density->parsed()) return cmd_density(pattern_path, base_path, out);
        if (optimize->parsed()) return cmd_optimize(pattern_path, parts_count, out);
        if (verify->parsed())
            return cmd_verify(r, delta_text, eps_text, a_text, finite_text, out);
        if (scan->parsed())
            return cmd_scan(r, delta_text, eps_grid, a_min, a_max, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
