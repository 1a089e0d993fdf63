// Brute-force oracles and seeded generators shared by the unit and acceptance tests.
// Everything here uses plain vectors of points and Graph::has_edge only, so it
// does not share code paths with the bit-level implementations under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "kanti/graph.hpp"
#include "kanti/set_family.hpp"

namespace oracle {

using Set = std::vector<int>;  // sorted points

inline Set points_of(const kanti::PointSet& s) { return s.points(); }

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline bool comparable(const Set& a, const Set& b) { return subset(a, b) || subset(b, a); }

/// All subsets of [n] of size k, increasing lexicographic order.
inline std::vector<Set> combinations(int n, int k) {
    std::vector<Set> out;
    if (k < 0 || k > n) return out;
    Set cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline std::vector<Set> all_subsets(int n) {
    std::vector<Set> out;
    for (int k = 0; k <= n; ++k) {
        auto level = combinations(n, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline bool is_clique(const kanti::Graph& g, const Set& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!g.has_edge(s[i], s[j])) return false;
        }
    }
    return true;
}

inline std::vector<Set> cliques(const kanti::Graph& g, int k) {
    std::vector<Set> out;
    for (auto& s : combinations(g.order(), k)) {
        if (is_clique(g, s)) out.push_back(s);
    }
    return out;
}

inline std::vector<Set> as_sets(const kanti::SetFamily& f) {
    std::vector<Set> out;
    for (const auto& s : f) out.push_back(s.points());
    return out;
}

inline bool is_antichain(const std::vector<Set>& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (comparable(f[i], f[j])) return false;
        }
    }
    return true;
}

/// Every ordered pair of distinct points separated by blocks.
inline bool is_css(int ground, const std::vector<Set>& blocks) {
    auto has = [](const Set& s, int x) { return std::binary_search(s.begin(), s.end(), x); };
    for (int a = 1; a <= ground; ++a) {
        for (int b = 1; b <= ground; ++b) {
            if (a == b) continue;
            bool ok = false;
            for (const auto& blk : blocks) ok = ok || (has(blk, a) && !has(blk, b));
            if (!ok) return false;
        }
    }
    return true;
}

/// No subset of [n] with a size in `sizes` can be added to the antichain f.
inline bool is_maximal(int n, const std::vector<Set>& f, const std::vector<int>& sizes) {
    for (int k : sizes) {
        for (const auto& s : combinations(n, k)) {
            bool blocked = false;
            for (const auto& m : f) blocked = blocked || comparable(s, m);
            if (!blocked) return false;
        }
    }
    return true;
}

inline bool is_strongly_maximal(int n, const std::vector<Set>& f) {
    std::vector<int> sizes;
    for (int k = 0; k <= n; ++k) sizes.push_back(k);
    return is_maximal(n, f, sizes);
}

inline bool saturated(const kanti::Graph& g, const std::vector<int>& upper) {
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (int k : upper) {
            for (const auto& c : cliques(g, k)) ok = ok || (std::binary_search(c.begin(), c.end(), u) && std::binary_search(c.begin(), c.end(), v));
        }
        if (!ok) return false;
    }
    return true;
}

/// Upper part of the canonical antichain: k-cliques (k in upper) lying in no
/// larger clique whose size is in upper.
inline std::vector<Set> canonical_upper(const kanti::Graph& g, const std::vector<int>& upper) {
    std::vector<Set> out;
    for (int k : upper) {
        for (const auto& c : cliques(g, k)) {
            bool covered = false;
            for (int k2 : upper) {
                if (k2 <= k) continue;
                for (const auto& d : cliques(g, k2)) covered = covered || subset(c, d);
            }
            if (!covered) out.push_back(c);
        }
    }
    return out;
}

inline bool is_sparse(const kanti::Graph& g, const std::vector<int>& upper) {
    const auto m = canonical_upper(g, upper);
    const int kstar = upper.front();
    for (std::size_t i = 0; i < m.size(); ++i) {
        bool witnessed = false;
        for (const auto& b : cliques(g, kstar)) {
            if (!subset(b, m[i])) continue;
            bool alone = true;
            for (std::size_t j = 0; j < m.size(); ++j) alone = alone && (j == i || !subset(b, m[j]));
            witnessed = witnessed || alone;
        }
        if (!witnessed) return false;
    }
    return true;
}

/// Minimum number of upper members over all admissible antichains of G, by
/// enumerating every subset of the candidate cliques. Returns -1 when there
/// are more than `limit` candidates.
inline int brute_min_upper(const kanti::Graph& g, const std::vector<int>& upper, int limit = 20) {
    std::vector<Set> cand;
    for (int k : upper) {
        auto c = cliques(g, k);
        cand.insert(cand.end(), c.begin(), c.end());
    }
    const int m = static_cast<int>(cand.size());
    if (m > limit) return -1;
    std::vector<std::uint32_t> comp(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (comparable(cand[static_cast<std::size_t>(i)], cand[static_cast<std::size_t>(j)])) comp[static_cast<std::size_t>(i)] |= 1U << j;
        }
    }
    int best = -1;
    for (std::uint32_t s = 0; s < (1U << m); ++s) {
        const int size = __builtin_popcount(s);
        if (best >= 0 && size >= best) continue;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            const std::uint32_t others = comp[static_cast<std::size_t>(i)] & ~(1U << i);
            if ((s >> i) & 1U) ok = (s & others) == 0;
            else ok = (s & comp[static_cast<std::size_t>(i)]) != 0;
        }
        if (ok) best = size;
    }
    return best;
}

/// Random graph in which every edge lies in a clique of size `kstar`: a union
/// of random cliques plus random edges, then edges outside every such clique
/// are dropped until stable.
inline kanti::Graph random_saturated(int n, int kstar, std::mt19937_64& rng) {
    std::vector<kanti::Edge> edges;
    std::uniform_int_distribution<int> vertex(1, n);
    std::uniform_int_distribution<int> clique_count(0, n);
    std::uniform_int_distribution<int> extra(0, n * 2);
    const int cliques_wanted = clique_count(rng);
    for (int c = 0; c < cliques_wanted; ++c) {
        std::uniform_int_distribution<int> size(kstar, std::min(n, kstar + 2));
        std::vector<int> verts(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(verts.begin(), verts.end(), rng);
        verts.resize(static_cast<std::size_t>(size(rng)));
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) edges.emplace_back(std::min(verts[i], verts[j]), std::max(verts[i], verts[j]));
        }
    }
    const int extras = extra(rng);
    for (int e = 0; e < extras; ++e) {
        const int u = vertex(rng);
        const int v = vertex(rng);
        if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    kanti::Graph g = kanti::Graph::from_edges(n, edges);
    while (true) {
        std::vector<kanti::Edge> keep;
        for (auto [u, v] : g.edges()) {
            if (g.has_clique_within(g.row(u) & g.row(v), kstar - 2)) keep.emplace_back(u, v);
        }
        if (static_cast<long long>(keep.size()) == g.edge_count()) return g;
        g = kanti::Graph::from_edges(n, keep);
    }
}

/// Union of `count` random k-cliques; saturated for K = {2, k} by construction.
inline kanti::Graph random_clique_union(int n, int k, int count, std::mt19937_64& rng) {
    std::vector<kanti::Edge> edges;
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int c = 0; c < count; ++c) {
        for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(verts.begin(), verts.end(), rng);
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                const int u = verts[static_cast<std::size_t>(i)];
                const int v = verts[static_cast<std::size_t>(j)];
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
        }
    }
    return kanti::Graph::from_edges(n, edges);
}

}  // namespace oracle
