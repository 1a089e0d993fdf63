#include "kanti/duality.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "kanti/clique_poset.hpp"
#include "kanti/family_io.hpp"

namespace kanti {
namespace {

std::uint64_t common_neighbors(const Graph& g, std::uint64_t clique) {
    std::uint64_t common = PointSet::full_mask(g.order());
    for (std::uint64_t m = clique; m; m &= m - 1) common &= g.row(std::countr_zero(m) + 1);
    return common & ~clique;
}

/// Clique lies in some clique of exactly `size` vertices.
bool extends_to(const Graph& g, std::uint64_t clique, int size) {
    const int extra = size - std::popcount(clique);
    if (extra < 0) return false;
    return g.has_clique_within(common_neighbors(g, clique), extra);
}

/// Calls fn on each k-subset of mask, as a mask; stops when fn returns true.
template <typename Fn>
bool any_subset(std::uint64_t mask, int k, std::uint64_t chosen, Fn&& fn) {
    if (k == 0) return fn(chosen);
    if (std::popcount(mask) < k) return false;
    while (std::popcount(mask) >= k) {
        const std::uint64_t low = mask & (~mask + 1);
        mask &= mask - 1;
        if (any_subset(mask, k - 1, chosen | low, fn)) return true;
    }
    return false;
}

void require_saturated(const Graph& g, const KSpec& k) {
    if (!is_k_saturated(g, k)) throw std::invalid_argument("graph is not " + k.to_string() + "-saturated");
}

SetFamily assemble(const Graph& g, const std::vector<PointSet>& upper) {
    SetFamily family = g.nonedges();
    for (const auto& s : upper) family.push_back(s);
    return family.sorted();
}

}  // namespace

std::size_t AdmissibleAntichain::upper_size() const {
    return static_cast<std::size_t>(std::count_if(family.begin(), family.end(), [](const PointSet& s) { return s.cardinality() != 2; }));
}

Graph graph_of(const SetFamily& antichain) {
    Graph g = Graph::complete(antichain.ground());
    std::vector<Edge> keep;
    for (auto [u, v] : g.edges()) {
        if (!antichain.contains(PointSet::of(antichain.ground(), {u, v}))) keep.emplace_back(u, v);
    }
    return Graph::from_edges(antichain.ground(), keep);
}

bool is_k_saturated(const Graph& g, const KSpec& k) {
    // An edge in any clique of size in K \ {2} is also in a k*-clique.
    const int need = k.kstar() - 2;
    for (auto [u, v] : g.edges()) {
        if (!g.has_clique_within(g.row(u) & g.row(v), need)) return false;
    }
    return true;
}

std::vector<PointSet> unsaturated_cliques(const Graph& g, const KSpec& k, int level) {
    if (!k.contains(level)) throw std::invalid_argument("level " + std::to_string(level) + " not in K");
    const auto& levels = k.levels();
    const auto next = std::upper_bound(levels.begin(), levels.end(), level);
    std::vector<PointSet> out;
    for (const auto& clique : g.k_cliques(level)) {
        // Lying in a larger clique of size in K implies lying in one of the next size up.
        if (next == levels.end() || !extends_to(g, clique.bits(), *next)) out.push_back(clique);
    }
    return out;
}

AdmissibleAntichain canonical_antichain(const Graph& g, const KSpec& k) {
    require_saturated(g, k);
    std::vector<PointSet> upper;
    for (int level : k.upper_levels()) {
        auto c = unsaturated_cliques(g, k, level);
        upper.insert(upper.end(), c.begin(), c.end());
    }
    return AdmissibleAntichain{g, k, assemble(g, upper)};
}

bool is_k_sparse(const Graph& g, const KSpec& k) {
    const AdmissibleAntichain a = canonical_antichain(g, k);
    std::vector<std::uint64_t> upper;
    for (const auto& s : a.family) {
        if (s.cardinality() != 2) upper.push_back(s.bits());
    }
    for (std::uint64_t member : upper) {
        const bool witnessed = any_subset(member, k.kstar(), 0, [&](std::uint64_t b) {
            return std::count_if(upper.begin(), upper.end(), [&](std::uint64_t m) { return (b & ~m) == 0; }) == 1;
        });
        if (!witnessed) return false;
    }
    return true;
}

namespace {

struct AddableSearch {
    int n;
    std::vector<std::uint64_t> members;
    std::vector<bool> wanted;  // by size
    int max_size;
    std::optional<PointSet> found;

    bool contained_in_member(std::uint64_t x) const {
        return std::any_of(members.begin(), members.end(), [&](std::uint64_t m) { return (x & ~m) == 0; });
    }

    bool is_member(std::uint64_t x) const { return std::find(members.begin(), members.end(), x) != members.end(); }

    // x contains no member; try x itself, then its extensions by larger points.
    bool dfs(std::uint64_t x, int next) {
        const int size = std::popcount(x);
        if (wanted[static_cast<std::size_t>(size)] && !is_member(x) && !contained_in_member(x)) {
            found = PointSet::from_bits(n, x);
            return true;
        }
        if (size >= max_size) return false;
        for (int p = next; p <= n; ++p) {
            const std::uint64_t bit = std::uint64_t{1} << (p - 1);
            const std::uint64_t y = x | bit;
            const bool blocked = std::any_of(members.begin(), members.end(),
                                             [&](std::uint64_t m) { return (m & bit) && (m & ~y) == 0; });
            if (!blocked && dfs(y, p + 1)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<PointSet> find_addable(const SetFamily& antichain, const std::vector<int>& sizes) {
    AddableSearch s{antichain.ground(), {}, std::vector<bool>(static_cast<std::size_t>(antichain.ground()) + 1, false), -1, std::nullopt};
    for (const auto& m : antichain) s.members.push_back(m.bits());
    for (int k : sizes) {
        if (k >= 0 && k <= s.n) {
            s.wanted[static_cast<std::size_t>(k)] = true;
            s.max_size = std::max(s.max_size, k);
        }
    }
    if (s.max_size < 0) return std::nullopt;
    // The empty set as a member blocks every candidate.
    if (s.is_member(0)) return std::nullopt;
    s.dfs(0, 1);
    return s.found;
}

bool is_maximal_k_antichain(const SetFamily& a, const KSpec& k) {
    if (!is_k_antichain(a, k)) throw std::invalid_argument("family is not a " + k.to_string() + "-antichain");
    return !find_addable(a, k.levels()).has_value();
}

bool is_strongly_maximal(const SetFamily& a) {
    if (!is_antichain(a)) throw std::invalid_argument("family is not an antichain");
    std::vector<int> all(static_cast<std::size_t>(a.ground()) + 1);
    for (int i = 0; i <= a.ground(); ++i) all[static_cast<std::size_t>(i)] = i;
    return !find_addable(a, all).has_value();
}

bool lemma3_holds(const Graph& g, const KSpec& k) {
    const auto& levels = k.levels();
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        const int lo = levels[i];
        const int hi = levels[i + 1];
        for (int q = lo + 1; q < hi; ++q) {
            for (const auto& b : g.k_cliques(q)) {
                if (extends_to(g, b.bits(), hi)) continue;
                const bool private_subclique =
                    any_subset(b.bits(), lo, 0, [&](std::uint64_t s) { return !extends_to(g, s, hi); });
                if (!private_subclique) return false;
            }
        }
    }
    return true;
}

std::optional<std::string> admissibility_failure(const Graph& g, const KSpec& k, const SetFamily& a) {
    if (a.ground() != g.order()) return "family ground size differs from graph order";
    if (a.has_duplicates()) return "family has duplicate members";
    if (!is_k_antichain(a, k)) return "family is not a " + k.to_string() + "-antichain";
    const SetFamily two = a.level(2).sorted();
    if (!(two == g.nonedges().sorted())) return "2-sets differ from the non-edges of the graph";
    for (const auto& s : a) {
        if (s.cardinality() != 2 && !g.is_clique(s)) return "member " + format_set(s) + " is not a clique";
    }
    for (int level : k.upper_levels()) {
        for (const auto& clique : g.k_cliques(level)) {
            const bool covered = std::any_of(a.begin(), a.end(), [&](const PointSet& s) {
                return s.cardinality() != 2 && s.comparable_with(clique);
            });
            if (!covered) return "a " + std::to_string(level) + "-clique is comparable with no member";
        }
    }
    return std::nullopt;
}

AdmissibleAntichain make_admissible(const Graph& g, const KSpec& k, const SetFamily& a) {
    if (auto why = admissibility_failure(g, k, a)) throw std::invalid_argument(*why);
    return AdmissibleAntichain{g, k, a};
}

AdmissibleAntichain min_antichain_for_graph(const Graph& g, const KSpec& k) {
    require_saturated(g, k);
    if (k.size() == 2) return canonical_antichain(g, k);

    CliquePoset poset;
    poset.build(g, k);
    MinMaximalAntichain solver(poset);
    auto best = solver.solve(poset.size());
    if (!best) throw std::logic_error("no admissible antichain found for a saturated graph");
    const std::size_t optimum = best->size();

    // Lexicographically least optimum: fix members greedily in lex order,
    // keeping some optimal completion alive.
    std::vector<std::size_t> order(poset.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lex_less(poset.cliques()[a], poset.cliques()[b]); });

    std::vector<std::size_t> include;
    std::vector<std::size_t> exclude;
    std::vector<std::size_t> witness = *best;
    for (std::size_t idx : order) {
        if (include.size() == optimum) break;
        const bool clashes = std::any_of(include.begin(), include.end(), [&](std::size_t i) {
            const auto comp = poset.comparable(i);
            return (comp[idx / 64] >> (idx % 64)) & 1U;
        });
        if (clashes) continue;
        include.push_back(idx);
        if (std::binary_search(witness.begin(), witness.end(), idx)) continue;
        if (auto completion = solver.solve(optimum, include, exclude)) {
            witness = *completion;
        } else {
            include.pop_back();
            exclude.push_back(idx);
        }
    }

    std::vector<PointSet> upper;
    for (std::size_t idx : witness) upper.push_back(poset.cliques()[idx]);
    return AdmissibleAntichain{g, k, assemble(g, upper)};
}

long long objective(const Graph& g, const AdmissibleAntichain& a) {
    return static_cast<long long>(g.edge_count()) - static_cast<long long>(a.upper_size());
}

}  // namespace kanti
