#include "kanti/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kanti/clique_poset.hpp"
#include "kanti/construct.hpp"

namespace kanti {
namespace {

constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

constexpr long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

bool saturated_fast(const Graph& g, int need) {
    for (int u = 1; u <= g.order(); ++u) {
        const std::uint64_t higher = g.row(u) & ~((std::uint64_t{2} << (u - 1)) - 1);
        for (std::uint64_t r = higher; r; r &= r - 1) {
            const int v = std::countr_zero(r) + 1;
            if (!g.has_clique_within(g.row(u) & g.row(v), need)) return false;
        }
    }
    return true;
}

struct Outcome {
    long long objective;
    std::vector<std::size_t> profile;
};

/// Per-thread evaluation state for one (n, K).
class Evaluator {
   public:
    Evaluator(int n, const KSpec& k) : n_(n), k_(k), solver_(poset_) {
        const int l = k.max();
        pairs_per_member_ = binomial(l, 2);
        kstar_per_member_ = binomial(l, k.kstar());
    }

    /// Largest objective any graph with `edges` edges can reach: every edge
    /// lies in an upper member and a member covers at most C(l, 2) edges.
    [[nodiscard]] long long edge_bound(long long edges) const { return edges - ceil_div(edges, pairs_per_member_); }

    /// Exact objective of g when it is saturated and can reach `floor`;
    /// nullopt otherwise. With prune off, floor is ignored.
    std::optional<Outcome> evaluate(const Graph& g, long long floor, bool prune, bool want_profile) {
        if (!saturated_fast(g, k_.kstar() - 2)) return std::nullopt;
        const long long edges = g.edge_count();
        const long long nonedges = binomial(n_, 2) - edges;
        if (k_.size() == 2) {
            const long long members = static_cast<long long>(g.count_cliques(k_.max()));
            const long long value = edges - members;
            if (prune && value < floor) return std::nullopt;
            Outcome out{value, {}};
            if (want_profile) out.profile = {static_cast<std::size_t>(nonedges), static_cast<std::size_t>(members)};
            return out;
        }
        std::size_t budget = std::numeric_limits<std::size_t>::max();
        if (prune) {
            // Each k*-clique needs an upper member containing it.
            const long long kstar_cliques = static_cast<long long>(g.count_cliques(k_.kstar()));
            const long long lower = std::max(ceil_div(edges, pairs_per_member_), ceil_div(kstar_cliques, kstar_per_member_));
            if (edges - lower < floor) return std::nullopt;
            if (floor != std::numeric_limits<long long>::min()) budget = static_cast<std::size_t>(edges - floor);
        }
        poset_.build(g, k_);
        const auto best = solver_.solve(budget);
        if (!best) return std::nullopt;
        Outcome out{edges - static_cast<long long>(best->size()), {}};
        if (want_profile) {
            out.profile.assign(k_.size(), 0);
            out.profile[0] = static_cast<std::size_t>(nonedges);
            for (std::size_t idx : *best) {
                const int size = poset_.cliques()[idx].cardinality();
                const auto pos = std::find(k_.levels().begin(), k_.levels().end(), size) - k_.levels().begin();
                ++out.profile[static_cast<std::size_t>(pos)];
            }
        }
        return out;
    }

   private:
    int n_;
    KSpec k_;
    long long pairs_per_member_;
    long long kstar_per_member_;
    CliquePoset poset_;
    MinMaximalAntichain solver_;
};

struct WorkerState {
    long long objective = std::numeric_limits<long long>::min();
    std::uint64_t code = 0;
    std::set<std::vector<std::size_t>> profiles;
    std::uint64_t scanned = 0;
    std::uint64_t evaluated = 0;
};

void scan_range(int n, const KSpec& k, const SearchOptions& options, std::uint64_t lo, std::uint64_t hi,
                std::atomic<long long>& incumbent, WorkerState& state) {
    Evaluator eval(n, k);
    std::vector<long long> bound(static_cast<std::size_t>(binomial(n, 2)) + 1);
    for (std::size_t e = 0; e < bound.size(); ++e) bound[e] = eval.edge_bound(static_cast<long long>(e));

    long long floor = incumbent.load(std::memory_order_relaxed);
    for (std::uint64_t code = lo; code < hi; ++code) {
        ++state.scanned;
        if ((code & 0xFFFF) == 0) floor = std::max(floor, incumbent.load(std::memory_order_relaxed));
        if (options.prune && bound[static_cast<std::size_t>(std::popcount(code))] < floor) continue;
        ++state.evaluated;
        const Graph g = Graph::from_code(n, code);
        const auto outcome = eval.evaluate(g, floor, options.prune, options.collect_profiles);
        if (!outcome) continue;
        if (outcome->objective > state.objective) {
            state.objective = outcome->objective;
            state.code = code;
            state.profiles.clear();
        }
        if (outcome->objective == state.objective && options.collect_profiles) state.profiles.insert(outcome->profile);
        if (outcome->objective > floor) {
            floor = outcome->objective;
            long long seen = incumbent.load(std::memory_order_relaxed);
            while (seen < floor && !incumbent.compare_exchange_weak(seen, floor, std::memory_order_relaxed)) {
            }
            floor = std::max(floor, seen);
        }
    }
}

/// Objective of the explicit construction, a feasible starting incumbent.
long long construction_seed(int n, const KSpec& k) {
    const Graph g = k.max() == 4 ? l4_graph(n) : general_graph(n, k);
    if (!is_k_saturated(g, k)) return std::numeric_limits<long long>::min();
    return objective(g, min_antichain_for_graph(g, k));
}

}  // namespace

SearchResult search_exact(int n, const KSpec& k, const SearchOptions& options) {
    if (n < kSearchMinN || n > kSearchMaxN) {
        throw std::invalid_argument("exact search supports 4 <= n <= 8, got " + std::to_string(n));
    }
    k.require_fits(n);
    const auto start = std::chrono::steady_clock::now();

    const std::uint64_t total = std::uint64_t{1} << binomial(n, 2);
    const unsigned jobs = std::max(1U, options.jobs);
    std::atomic<long long> incumbent(options.prune ? construction_seed(n, k) : std::numeric_limits<long long>::min());

    std::vector<WorkerState> states(jobs);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::uint64_t lo = std::min(total, chunk * j);
        const std::uint64_t hi = std::min(total, lo + chunk);
        workers.emplace_back(scan_range, n, std::cref(k), std::cref(options), lo, hi, std::ref(incumbent), std::ref(states[j]));
    }
    for (auto& w : workers) w.join();

    SearchResult result;
    result.n = n;
    result.k = k;
    WorkerState best;
    for (const auto& s : states) {
        result.graphs_scanned += s.scanned;
        result.graphs_evaluated += s.evaluated;
        if (s.objective > best.objective || (s.objective == best.objective && s.code < best.code)) {
            best.objective = s.objective;
            best.code = s.code;
        }
    }
    for (const auto& s : states) {
        if (s.objective == best.objective) result.optimal_profiles.insert(s.profiles.begin(), s.profiles.end());
    }
    if (best.objective == std::numeric_limits<long long>::min()) throw std::logic_error("search found no saturated graph");

    result.witness_code = best.code;
    result.witness_graph = Graph::from_code(n, best.code);
    const AdmissibleAntichain witness = min_antichain_for_graph(result.witness_graph, k);
    result.best_objective = objective(result.witness_graph, witness);
    if (result.best_objective != best.objective) throw std::logic_error("witness objective disagrees with the scan");
    result.witness_antichain = witness.family;
    result.min_antichain_size = binomial(n, 2) - result.best_objective;
    result.profile = profile(witness.family);
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

WitnessReport verify_witness(const Graph& g, const SetFamily& a, const KSpec& k) {
    WitnessReport r;
    r.saturated = is_k_saturated(g, k);
    r.admissibility_failure = admissibility_failure(g, k, a);
    try {
        r.maximal = is_maximal_k_antichain(a, k);
    } catch (const std::invalid_argument&) {
        r.maximal = false;
    }
    r.edges = g.edge_count();
    long long upper = 0;
    for (const auto& s : a) upper += s.cardinality() != 2 ? 1 : 0;
    r.objective = r.edges - upper;
    r.antichain_size = static_cast<long long>(a.size());
    r.profile = profile(a);

    const int n = g.order();
    const int d = g.degree(1);
    bool regular = true;
    for (int v = 2; v <= n; ++v) regular = regular && g.degree(v) == d;
    if (regular) r.regular_degree = d;

    const auto cliques = g.k_cliques(k.max());
    std::vector<int> per_vertex(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& c : cliques) {
        for (int v : c.points()) ++per_vertex[static_cast<std::size_t>(v)];
    }
    r.min_vertex_multiplicity = *std::min_element(per_vertex.begin() + 1, per_vertex.end());
    r.max_vertex_multiplicity = *std::max_element(per_vertex.begin() + 1, per_vertex.end());
    bool first = true;
    for (auto [u, v] : g.edges()) {
        const PointSet e = PointSet::of(n, {u, v});
        const int m = static_cast<int>(std::count_if(cliques.begin(), cliques.end(), [&](const PointSet& c) { return e.is_subset_of(c); }));
        r.min_edge_multiplicity = first ? m : std::min(r.min_edge_multiplicity, m);
        r.max_edge_multiplicity = first ? m : std::max(r.max_edge_multiplicity, m);
        first = false;
    }
    return r;
}

std::vector<TableRow> table_reproduce(int n_max, int search_max_n, const SearchOptions& options) {
    std::vector<TableRow> rows;
    const KSpec k24({2, 4});
    const KSpec k234({2, 3, 4});
    for (int n = kSearchMinN; n <= n_max; ++n) {
        TableRow row;
        row.n = n;
        row.construction_size = choose2(n) - f_conjecture(n);
        if (n <= search_max_n && n <= kSearchMaxN) {
            const auto a = search_exact(n, k24, options);
            const auto b = search_exact(n, k234, options);
            row.k24 = {a.min_antichain_size, profile_vector(a.profile, k24), true};
            row.k234 = {b.min_antichain_size, profile_vector(b.profile, k234), true};
        } else {
            const Graph g = l4_graph(n);
            const auto ca = canonical_antichain(g, k24);
            const auto cb = min_antichain_for_graph(g, k234);
            row.k24 = {static_cast<long long>(ca.size()), profile_vector(profile(ca.family), k24), false};
            row.k234 = {static_cast<long long>(cb.size()), profile_vector(profile(cb.family), k234), false};
        }
        rows.push_back(row);
    }
    return rows;
}

std::string format_table(const std::vector<TableRow>& rows) {
    auto cell = [](const TableEntry& e) {
        std::ostringstream out;
        out << (e.exact ? "" : "<=") << e.size << " (";
        for (std::size_t i = 0; i < e.profile.size(); ++i) out << (i ? "," : "") << e.profile[i];
        out << ')';
        return out.str();
    };
    std::ostringstream out;
    out << std::setw(3) << "n" << "  " << std::setw(16) << "K={2,4}" << "  " << std::setw(18) << "K={2,3,4}"
        << "  " << std::setw(10) << "C(n,2)-f(n)" << '\n';
    for (const auto& r : rows) {
        out << std::setw(3) << r.n << "  " << std::setw(16) << cell(r.k24) << "  " << std::setw(18) << cell(r.k234)
            << "  " << std::setw(10) << r.construction_size << '\n';
    }
    out << "<= marks rows filled from the explicit construction rather than exact search.\n";
    return out.str();
}

}  // namespace kanti
