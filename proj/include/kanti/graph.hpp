#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kanti/point_set.hpp"
#include "kanti/set_family.hpp"

namespace kanti {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n (n <= 63), one adjacency word per
/// vertex. Rows are kept symmetric and irreflexive by every constructor.
class Graph {
   public:
    Graph() = default;
    explicit Graph(int n);

    /// Throws on loops or out-of-range vertices; duplicate edges collapse.
    static Graph from_edges(int n, const std::vector<Edge>& edges);
    static Graph complete(int n);
    /// Edge slot p of the lexicographic pair order (1,2),(1,3),...,(n-1,n)
    /// is present iff bit p of code is set.
    static Graph from_code(int n, std::uint64_t code);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] bool has_edge(int u, int v) const;
    /// Neighbours of v as a raw mask (vertex w in bit w - 1).
    [[nodiscard]] std::uint64_t row(int v) const { return rows_[static_cast<std::size_t>(v - 1)]; }
    [[nodiscard]] PointSet neighbors(int v) const { return PointSet::from_bits(n_, row(v)); }
    [[nodiscard]] int degree(int v) const { return std::popcount(row(v)); }
    [[nodiscard]] int edge_count() const;
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] std::uint64_t code() const;

    [[nodiscard]] bool is_clique(const PointSet& s) const { return is_clique_mask(s.bits()); }
    [[nodiscard]] bool is_clique_mask(std::uint64_t mask) const;

    /// All k-cliques, in lexicographic order of their point sequences.
    [[nodiscard]] std::vector<PointSet> k_cliques(int k) const;
    [[nodiscard]] std::uint64_t count_cliques(int k) const;
    [[nodiscard]] std::uint64_t triangle_count() const { return count_cliques(3); }
    /// True iff the vertices in mask span a k-clique.
    [[nodiscard]] bool has_clique_within(std::uint64_t mask, int k) const;

    /// Unordered non-adjacent pairs as 2-sets, lexicographic.
    [[nodiscard]] SetFamily nonedges() const;
    [[nodiscard]] std::string to_dot(const std::string& name = "G") const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

   private:
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    std::array<std::uint64_t, kMaxGround> rows_{};
};

/// Adjacency-bitset graph without the 63-vertex cap. Used to evaluate the
/// explicit constructions at large n.
class WideGraph {
   public:
    explicit WideGraph(int n);

    void add_edge(int u, int v);
    [[nodiscard]] bool has_edge(int u, int v) const;
    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] std::uint64_t edge_count() const;
    [[nodiscard]] std::uint64_t count_cliques(int k) const;

   private:
    [[nodiscard]] const std::uint64_t* row(int v) const { return &bits_[static_cast<std::size_t>(v) * words_]; }
    [[nodiscard]] std::uint64_t* row(int v) { return &bits_[static_cast<std::size_t>(v) * words_]; }
    std::uint64_t count_in(std::vector<std::uint64_t>& masks, std::size_t depth, int start, int k) const;

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace kanti
