// kanti: command-line front end for maximal K-antichains and K-saturated graphs.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "kanti/bounds.hpp"
#include "kanti/construct.hpp"
#include "kanti/duality.hpp"
#include "kanti/family_io.hpp"
#include "kanti/json_io.hpp"
#include "kanti/search.hpp"

namespace {

using kanti::Json;

constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

kanti::SetFamily load_family(const std::string& path, int n) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const Json j = Json::parse(text, nullptr, false);
        if (!j.is_discarded() && j.is_object() && j.contains("antichain")) {
            // Per-level layout written by `canonical --json`.
            Json flat{{"n", j.at("n")}, {"sets", Json::array()}};
            for (const auto& [level, sets] : j.at("antichain").items()) {
                for (const auto& s : sets) flat["sets"].push_back(s);
            }
            return kanti::family_from_json(flat);
        }
        if (!j.is_discarded() && j.is_object()) return kanti::family_from_json(j);
    }
    if (n <= 0) throw std::runtime_error("text family files need --n");
    return kanti::parse_family(text, n);
}

kanti::Graph load_graph(const std::string& path) {
    const Json j = Json::parse(read_file(path), nullptr, false);
    if (j.is_discarded()) throw std::runtime_error(path + " is not valid graph JSON");
    return kanti::graph_from_json(j);
}

unsigned default_jobs() {
    if (const char* env = std::getenv("ANTICHAIN_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

void print_bool(const char* label, bool value) { std::cout << label << ": " << (value ? "true" : "false") << '\n'; }

int write_dot(const std::string& path, const kanti::Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << g.to_dot();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum maximal K-antichains via K-saturated graphs"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable JSON output");

    // construct
    auto* construct = app.add_subcommand("construct", "Explicit K-saturated construction graph");
    int c_n = 0;
    std::string c_k = "2,4";
    bool c_l4 = false;
    std::string c_format = "dot";
    construct->add_option("--n", c_n, "Number of points")->required();
    construct->add_option("--K", c_k, "Levels, e.g. 2,4");
    construct->add_flag("--l4", c_l4, "Use the refined l = 4 construction");
    construct->add_option("--format", c_format, "Graph output: dot or json")->check(CLI::IsMember({"dot", "json"}));
    construct->add_flag("--json", json);

    // check
    auto* check = app.add_subcommand("check", "Antichain, K-antichain and maximality verdicts");
    std::string ch_family;
    std::string ch_k;
    int ch_n = 0;
    check->add_option("--family", ch_family, "Family file (text or JSON)")->required();
    check->add_option("--K", ch_k, "Levels, e.g. 2,3,4")->required();
    check->add_option("--n", ch_n, "Ground size for text files");
    check->add_flag("--json", json);

    // canonical
    auto* canonical = app.add_subcommand("canonical", "Canonical antichain of a saturated graph");
    std::string ca_graph;
    std::string ca_k;
    canonical->add_option("--graph", ca_graph, "Graph JSON file")->required();
    canonical->add_option("--K", ca_k, "Levels")->required();
    canonical->add_flag("--json", json);

    // dual
    auto* dual = app.add_subcommand("dual", "Dual family and CSS verdict");
    std::string du_family;
    int du_n = 0;
    dual->add_option("--family", du_family, "Family file")->required();
    dual->add_option("--n", du_n, "Ground size for text files");
    dual->add_flag("--json", json);

    // search
    auto* search = app.add_subcommand("search", "Exact search over all graphs on n <= 8 vertices");
    int s_n = 0;
    std::string s_k = "2,4";
    unsigned s_jobs = default_jobs();
    bool s_no_prune = false;
    bool s_profiles = false;
    std::string s_dot;
    search->add_option("--n", s_n, "Number of points (4..8)")->required();
    search->add_option("--K", s_k, "Levels");
    search->add_option("--jobs", s_jobs, "Worker threads (default $ANTICHAIN_JOBS or 1)");
    search->add_flag("--no-prune", s_no_prune, "Evaluate every saturated graph exactly");
    search->add_flag("--profiles", s_profiles, "Report every optimal profile found");
    search->add_option("--dot", s_dot, "Write the witness graph as DOT");
    search->add_flag("--json", json);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Asymptotic bound coefficients");
    bool b_constants = false;
    int b_l = 0;
    double b_gamma = -1.0;
    bounds->add_flag("--constants", b_constants, "K = {2,4} constants");
    bounds->add_option("--l", b_l, "Largest level for the leading coefficients");
    bounds->add_option("--gamma", b_gamma, "Edge density");
    bounds->add_flag("--json", json);

    // table
    auto* table = app.add_subcommand("table", "Small-n table of minimum sizes and profiles");
    int t_nmax = 7;
    int t_search = 7;
    unsigned t_jobs = default_jobs();
    table->add_option("--nmax", t_nmax, "Largest n");
    table->add_option("--search-max", t_search, "Largest n solved by exact search (<= 8)");
    table->add_option("--jobs", t_jobs, "Worker threads");
    table->add_flag("--json", json);

    // verify
    auto* verify = app.add_subcommand("verify", "Certify a (graph, antichain) pair");
    std::string v_graph;
    std::string v_family;
    std::string v_k;
    verify->add_option("--graph", v_graph, "Graph JSON file")->required();
    verify->add_option("--antichain", v_family, "Antichain file")->required();
    verify->add_option("--K", v_k, "Levels")->required();
    verify->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*construct) {
            const kanti::KSpec k = kanti::KSpec::parse(c_k);
            if (c_l4 && k.max() != 4) throw std::invalid_argument("--l4 needs max K = 4");
            const kanti::Graph g = c_l4 ? kanti::l4_graph(c_n) : kanti::general_graph(c_n, k);
            const auto a = kanti::min_antichain_for_graph(g, k);
            const long long obj = kanti::objective(g, a);
            if (json) {
                std::cout << Json{{"graph", kanti::to_json(g)},
                                  {"objective", obj},
                                  {"antichain_size", a.size()},
                                  {"profile", kanti::profile_vector(kanti::profile(a.family), k)},
                                  {"k_sparse", kanti::is_k_sparse(g, k)}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << (c_format == "json" ? kanti::to_json(g).dump(2) + "\n" : g.to_dot());
                // Keep stdout a loadable graph file in json format.
                (c_format == "json" ? std::cerr : std::cout) << "# edges " << g.edge_count() << ", objective " << obj << ", antichain size " << a.size()
                          << ", profile " << kanti::format_profile(kanti::profile(a.family), k) << '\n';
            }
            return 0;
        }

        if (*check) {
            const kanti::KSpec k = kanti::KSpec::parse(ch_k);
            const auto family = load_family(ch_family, ch_n);
            const bool antichain = kanti::is_antichain(family);
            const bool k_antichain = antichain && kanti::is_k_antichain(family, k);
            const bool maximal = k_antichain && kanti::is_maximal_k_antichain(family, k);
            const bool strong = antichain && kanti::is_strongly_maximal(family);
            if (json) {
                std::cout << Json{{"antichain", antichain}, {"k_antichain", k_antichain}, {"maximal", maximal}, {"strongly_maximal", strong}}.dump(2) << '\n';
            } else {
                print_bool("antichain", antichain);
                print_bool("K-antichain", k_antichain);
                print_bool("maximal", maximal);
                print_bool("strongly maximal", strong);
            }
            return antichain && k_antichain && maximal && strong ? 0 : kExitFailedCheck;
        }

        if (*canonical) {
            const kanti::KSpec k = kanti::KSpec::parse(ca_k);
            const kanti::Graph g = load_graph(ca_graph);
            const auto a = kanti::canonical_antichain(g, k);
            const bool sparse = kanti::is_k_sparse(g, k);
            const bool lemma3 = kanti::lemma3_holds(g, k);
            if (json) {
                Json out = kanti::to_json(a);
                out["k_sparse"] = sparse;
                out["strongly_maximal_condition"] = lemma3;
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << kanti::format_family(a.family) << '\n';
                std::cout << "size: " << a.size() << ", profile " << kanti::format_profile(kanti::profile(a.family), k) << '\n';
                print_bool("K-sparse", sparse);
                print_bool("strongly maximal condition", lemma3);
            }
            return sparse && lemma3 ? 0 : kExitFailedCheck;
        }

        if (*dual) {
            const auto family = load_family(du_family, du_n);
            const auto blocks = kanti::dual(family);
            const bool css = kanti::is_css(blocks);
            if (json) {
                std::cout << Json{{"dual", kanti::to_json(blocks)}, {"css", css}}.dump(2) << '\n';
            } else {
                std::cout << kanti::format_family(blocks) << '\n';
                print_bool("completely separating", css);
            }
            return css ? 0 : kExitFailedCheck;
        }

        if (*search) {
            const kanti::KSpec k = kanti::KSpec::parse(s_k);
            kanti::SearchOptions options;
            options.jobs = s_jobs;
            options.prune = !s_no_prune;
            options.collect_profiles = s_profiles;
            const auto result = kanti::search_exact(s_n, k, options);
            if (!s_dot.empty()) write_dot(s_dot, result.witness_graph);
            if (json) {
                std::cout << kanti::to_json(result).dump(2) << '\n';
            } else {
                std::cout << "n = " << s_n << ", K = " << k.to_string() << '\n';
                std::cout << "max objective: " << result.best_objective << '\n';
                std::cout << "min antichain size: " << result.min_antichain_size << '\n';
                std::cout << "profile: " << kanti::format_profile(result.profile, k) << '\n';
                std::cout << "witness: " << kanti::format_family(result.witness_antichain) << '\n';
                std::cout << "graphs scanned: " << result.graphs_scanned << ", evaluated: " << result.graphs_evaluated
                          << ", " << result.elapsed.count() << " s\n";
                for (const auto& p : result.optimal_profiles) {
                    std::cout << "optimal profile: (";
                    for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? "," : "") << p[i];
                    std::cout << ")\n";
                }
            }
            return 0;
        }

        if (*bounds) {
            namespace b = kanti::bounds;
            if (!b_constants && b_l == 0 && b_gamma < 0.0) b_constants = true;
            Json out = Json::object();
            if (b_constants) {
                out["thm2_constant"] = b::thm2_constant();
                out["gamma_star"] = b::gamma_star();
                out["gamma_star_closed_form"] = b::gamma_star_closed_form();
                out["corollary_lower_coeff"] = b::corollary_lower_coeff();
                out["conjectured_objective_coeff"] = 3.0 / 16.0;
            }
            if (b_l != 0) {
                out["l"] = b_l;
                out["thm1_coeff"] = b::thm1_coeff(b_l).to_string();
                out["antichain_coeff"] = b::antichain_coeff(b_l).to_string();
            }
            if (b_gamma >= 0.0) {
                out["gamma"] = b_gamma;
                out["first_bound"] = b::first_bound(b_gamma);
                if (b_gamma <= 1.0 / 3.0) out["triangle_lower"] = b::triangle_lower(b_gamma);
                if (b_gamma >= 0.25 && b_gamma <= 1.0 / 3.0) out["second_bound"] = b::second_bound(b_gamma);
            }
            if (json) {
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout.precision(12);
                for (const auto& [key, value] : out.items()) {
                    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
                }
            }
            return 0;
        }

        if (*table) {
            kanti::SearchOptions options;
            options.jobs = t_jobs;
            const auto rows = kanti::table_reproduce(t_nmax, t_search, options);
            if (json) {
                Json out = Json::array();
                for (const auto& r : rows) {
                    out.push_back({{"n", r.n},
                                   {"k24", {{"size", r.k24.size}, {"profile", r.k24.profile}, {"exact", r.k24.exact}}},
                                   {"k234", {{"size", r.k234.size}, {"profile", r.k234.profile}, {"exact", r.k234.exact}}},
                                   {"construction_size", r.construction_size}});
                }
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << kanti::format_table(rows);
            }
            return 0;
        }

        if (*verify) {
            const kanti::KSpec k = kanti::KSpec::parse(v_k);
            const kanti::Graph g = load_graph(v_graph);
            const auto family = load_family(v_family, g.order());
            const auto report = kanti::verify_witness(g, family, k);
            if (json) {
                std::cout << kanti::to_json(report).dump(2) << '\n';
            } else {
                print_bool("saturated", report.saturated);
                std::cout << "admissible: " << (report.admissibility_failure ? "false (" + *report.admissibility_failure + ")" : "true") << '\n';
                print_bool("maximal", report.maximal);
                std::cout << "edges: " << report.edges << "\nobjective: " << report.objective
                          << "\nantichain size: " << report.antichain_size << "\nprofile: " << kanti::format_profile(report.profile, k)
                          << "\nregular: " << (report.regular_degree ? std::to_string(*report.regular_degree) : "no")
                          << "\nedge clique multiplicity: " << report.min_edge_multiplicity << ".." << report.max_edge_multiplicity
                          << "\nvertex clique multiplicity: " << report.min_vertex_multiplicity << ".." << report.max_vertex_multiplicity << '\n';
            }
            return report.passed() ? 0 : kExitFailedCheck;
        }
    } catch (const std::exception& e) {
        std::cerr << "kanti: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
