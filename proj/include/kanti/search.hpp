#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kanti/duality.hpp"
#include "kanti/graph.hpp"
#include "kanti/set_family.hpp"

namespace kanti {

inline constexpr int kSearchMinN = 4;
inline constexpr int kSearchMaxN = 8;

struct SearchOptions {
    unsigned jobs = 1;
    /// Edge-count and clique lower-bound cuts against the incumbent. Off
    /// evaluates every saturated graph exactly; kept for cross-checks.
    bool prune = true;
    /// Record the profile of every optimal graph's minimiser.
    bool collect_profiles = false;
};

struct SearchResult {
    int n = 0;
    KSpec k{{2, 4}};
    long long best_objective = 0;
    long long min_antichain_size = 0;
    Profile profile;
    Graph witness_graph;
    SetFamily witness_antichain;
    std::uint64_t witness_code = 0;
    std::uint64_t graphs_scanned = 0;
    /// Graphs that passed the cheap filters and were checked for saturation.
    std::uint64_t graphs_evaluated = 0;
    std::chrono::duration<double> elapsed{};
    /// Distinct optimal profile vectors (over K), when collected.
    std::set<std::vector<std::size_t>> optimal_profiles;
};

/// Maximises |E| - min over admissible antichains of the upper-level count,
/// over all K-saturated graphs on [n] (4 <= n <= 8), by scanning every edge
/// code. The witness is the optimal graph with the least edge code, paired
/// with its lexicographically least minimising antichain. The result does not
/// depend on `jobs`.
[[nodiscard]] SearchResult search_exact(int n, const KSpec& k, const SearchOptions& options = {});

struct WitnessReport {
    bool saturated = false;
    std::optional<std::string> admissibility_failure;
    bool maximal = false;
    long long edges = 0;
    long long objective = 0;
    long long antichain_size = 0;
    Profile profile;
    std::optional<int> regular_degree;
    /// Over all edges / vertices: how many max(K)-cliques contain them.
    int min_edge_multiplicity = 0;
    int max_edge_multiplicity = 0;
    int min_vertex_multiplicity = 0;
    int max_vertex_multiplicity = 0;

    [[nodiscard]] bool passed() const { return saturated && !admissibility_failure && maximal; }
};

/// Certifies an externally supplied (graph, antichain) pair. Never throws on
/// bad input; failures are recorded in the report.
[[nodiscard]] WitnessReport verify_witness(const Graph& g, const SetFamily& a, const KSpec& k);

struct TableEntry {
    long long size = 0;
    std::vector<std::size_t> profile;
    /// True when backed by exact search; otherwise a construction upper bound.
    bool exact = false;
};

struct TableRow {
    int n = 0;
    TableEntry k24;
    TableEntry k234;
    long long construction_size = 0;
};

/// Rows n = 4..n_max. Rows with n <= search_max_n are searched exactly, the
/// rest are filled from the l = 4 construction.
[[nodiscard]] std::vector<TableRow> table_reproduce(int n_max, int search_max_n, const SearchOptions& options = {});
[[nodiscard]] std::string format_table(const std::vector<TableRow>& rows);

}  // namespace kanti
