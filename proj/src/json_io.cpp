#include "kanti/json_io.hpp"

#include <stdexcept>

namespace kanti {
namespace {

int read_n(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
        throw std::invalid_argument("JSON object needs an integer field \"n\"");
    }
    return j.at("n").get<int>();
}

Json edges_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return edges;
}

}  // namespace

Json to_json(const SetFamily& family) {
    Json sets = Json::array();
    for (const auto& s : family) sets.push_back(s.points());
    return {{"n", family.ground()}, {"sets", sets}};
}

SetFamily family_from_json(const Json& j) {
    const int n = read_n(j);
    if (!j.contains("sets") || !j.at("sets").is_array()) throw std::invalid_argument("family JSON needs a \"sets\" array");
    SetFamily family(n);
    for (const auto& s : j.at("sets")) {
        if (!s.is_array()) throw std::invalid_argument("each set must be an array of points");
        PointSet p(n);
        for (const auto& x : s) {
            if (!x.is_number_integer()) throw std::invalid_argument("points must be integers");
            p.insert(x.get<int>());
        }
        family.push_back(p);
    }
    return family;
}

Json to_json(const Graph& g) { return {{"n", g.order()}, {"edges", edges_json(g)}}; }

Graph graph_from_json(const Json& j) {
    const int n = read_n(j);
    if (!j.contains("edges") || !j.at("edges").is_array()) throw std::invalid_argument("graph JSON needs an \"edges\" array");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw std::invalid_argument("each edge must be a pair of integers");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(n, edges);
}

Json to_json(const AdmissibleAntichain& a) {
    Json levels = Json::object();
    for (int k : a.k.levels()) {
        Json sets = Json::array();
        for (const auto& s : a.family.level(k)) sets.push_back(s.points());
        levels[std::to_string(k)] = sets;
    }
    return {{"n", a.graph.order()}, {"K", a.k.levels()}, {"graph_edges", edges_json(a.graph)}, {"antichain", levels}};
}

Json to_json(const Profile& p) {
    Json out = Json::object();
    for (auto [k, count] : p) out[std::to_string(k)] = count;
    return out;
}

Json to_json(const SearchResult& r) {
    Json profiles = Json::array();
    for (const auto& p : r.optimal_profiles) profiles.push_back(p);
    return {{"n", r.n},
            {"K", r.k.levels()},
            {"best_objective", r.best_objective},
            {"min_antichain_size", r.min_antichain_size},
            {"profile", profile_vector(r.profile, r.k)},
            {"witness_graph", to_json(r.witness_graph)},
            {"witness_antichain", to_json(r.witness_antichain)},
            {"witness_code", r.witness_code},
            {"graphs_scanned", r.graphs_scanned},
            {"graphs_evaluated", r.graphs_evaluated},
            {"elapsed_seconds", r.elapsed.count()},
            {"optimal_profiles", profiles}};
}

Json to_json(const WitnessReport& r) {
    Json out = {{"saturated", r.saturated},
                {"admissible", !r.admissibility_failure.has_value()},
                {"maximal", r.maximal},
                {"edges", r.edges},
                {"objective", r.objective},
                {"antichain_size", r.antichain_size},
                {"profile", to_json(r.profile)},
                {"regular_degree", r.regular_degree ? Json(*r.regular_degree) : Json(nullptr)},
                {"edge_clique_multiplicity", {r.min_edge_multiplicity, r.max_edge_multiplicity}},
                {"vertex_clique_multiplicity", {r.min_vertex_multiplicity, r.max_vertex_multiplicity}},
                {"passed", r.passed()}};
    if (r.admissibility_failure) out["admissibility_failure"] = *r.admissibility_failure;
    return out;
}

}  // namespace kanti
