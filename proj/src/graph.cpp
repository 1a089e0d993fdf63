#include "kanti/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace kanti {
namespace {

constexpr std::uint64_t above(int v) {
    // Mask of vertices strictly greater than v (1-based).
    return v >= 64 ? 0 : ~((std::uint64_t{1} << v) - 1);
}

void collect_cliques(const Graph& g, std::uint64_t clique, std::uint64_t cand, int remaining,
                     std::vector<PointSet>& out) {
    if (remaining == 0) {
        out.push_back(PointSet::from_bits(g.order(), clique));
        return;
    }
    while (cand) {
        const int w = std::countr_zero(cand) + 1;
        cand &= cand - 1;
        if (std::popcount(cand) + 1 < remaining) return;
        collect_cliques(g, clique | (std::uint64_t{1} << (w - 1)), cand & g.row(w), remaining - 1, out);
    }
}

std::uint64_t count_from(const Graph& g, std::uint64_t cand, int remaining) {
    if (remaining == 0) return 1;
    if (remaining == 1) return static_cast<std::uint64_t>(std::popcount(cand));
    std::uint64_t total = 0;
    while (cand) {
        const int w = std::countr_zero(cand) + 1;
        cand &= cand - 1;
        if (std::popcount(cand) + 1 < remaining) break;
        total += count_from(g, cand & g.row(w), remaining - 1);
    }
    return total;
}

bool exists_from(const Graph& g, std::uint64_t cand, int remaining) {
    if (remaining <= 0) return true;
    if (remaining == 1) return cand != 0;
    while (std::popcount(cand) >= remaining) {
        const int w = std::countr_zero(cand) + 1;
        cand &= cand - 1;
        if (exists_from(g, cand & g.row(w), remaining - 1)) return true;
    }
    return false;
}

void check_order(int n) {
    if (n < 2 || n > kMaxGround) throw std::invalid_argument("graph order " + std::to_string(n) + " outside [2, 63]");
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > n || v > n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        g.add_edge_unchecked(u, v);
    }
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u) g.rows_[static_cast<std::size_t>(u - 1)] = PointSet::full_mask(n) & ~(std::uint64_t{1} << (u - 1));
    return g;
}

Graph Graph::from_code(int n, std::uint64_t code) {
    Graph g(n);
    int slot = 0;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v, ++slot) {
            if (slot < 64 && ((code >> slot) & 1U)) g.add_edge_unchecked(u, v);
        }
    }
    if (slot < 64 && (code >> slot) != 0) throw std::invalid_argument("edge code has bits beyond C(n,2)");
    return g;
}

void Graph::add_edge_unchecked(int u, int v) {
    rows_[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
    rows_[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (u - 1);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_) return false;
    return (row(u) >> (v - 1)) & 1U;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 1; v <= n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u) {
        for (std::uint64_t r = row(u) & above(u); r; r &= r - 1) out.emplace_back(u, std::countr_zero(r) + 1);
    }
    return out;
}

std::uint64_t Graph::code() const {
    if (n_ * (n_ - 1) / 2 > 64) throw std::invalid_argument("edge code needs C(n,2) <= 64");
    std::uint64_t code = 0;
    int slot = 0;
    for (int u = 1; u <= n_; ++u) {
        for (int v = u + 1; v <= n_; ++v, ++slot) {
            if (has_edge(u, v)) code |= std::uint64_t{1} << slot;
        }
    }
    return code;
}

bool Graph::is_clique_mask(std::uint64_t mask) const {
    for (std::uint64_t m = mask; m; m &= m - 1) {
        const int v = std::countr_zero(m) + 1;
        if ((mask & ~(std::uint64_t{1} << (v - 1)) & ~row(v)) != 0) return false;
    }
    return true;
}

std::vector<PointSet> Graph::k_cliques(int k) const {
    std::vector<PointSet> out;
    if (k < 0 || k > n_) return out;
    collect_cliques(*this, 0, PointSet::full_mask(n_), k, out);
    return out;
}

std::uint64_t Graph::count_cliques(int k) const {
    if (k < 0 || k > n_) return 0;
    if (k == 0) return 1;
    if (k == 1) return static_cast<std::uint64_t>(n_);
    std::uint64_t total = 0;
    for (int v = 1; v <= n_; ++v) total += count_from(*this, row(v) & above(v), k - 1);
    return total;
}

bool Graph::has_clique_within(std::uint64_t mask, int k) const { return exists_from(*this, mask, k); }

SetFamily Graph::nonedges() const {
    SetFamily out(n_);
    for (int u = 1; u <= n_; ++u) {
        for (int v = u + 1; v <= n_; ++v) {
            if (!has_edge(u, v)) out.push_back(PointSet::of(n_, {u, v}));
        }
    }
    return out;
}

std::string Graph::to_dot(const std::string& name) const {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 1; v <= n_; ++v) out << "  " << v << ";\n";
    for (auto [u, v] : edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

WideGraph::WideGraph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64)) {
    if (n < 1) throw std::invalid_argument("wide graph needs at least one vertex");
}

void WideGraph::add_edge(int u, int v) {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) {
        throw std::invalid_argument("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    --u;
    --v;
    row(u)[v / 64] |= std::uint64_t{1} << (v % 64);
    row(v)[u / 64] |= std::uint64_t{1} << (u % 64);
}

bool WideGraph::has_edge(int u, int v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_) return false;
    --u;
    --v;
    return (row(u)[v / 64] >> (v % 64)) & 1U;
}

std::uint64_t WideGraph::edge_count() const {
    std::uint64_t twice = 0;
    for (std::uint64_t w : bits_) twice += static_cast<std::uint64_t>(std::popcount(w));
    return twice / 2;
}

std::uint64_t WideGraph::count_in(std::vector<std::uint64_t>& masks, std::size_t depth, int start, int k) const {
    const std::uint64_t* mask = &masks[depth * static_cast<std::size_t>(words_)];
    std::uint64_t total = 0;
    if (k == 1) {
        for (int i = start; i < words_; ++i) total += static_cast<std::uint64_t>(std::popcount(mask[i]));
        return total;
    }
    std::uint64_t* next = &masks[(depth + 1) * static_cast<std::size_t>(words_)];
    for (int i = start; i < words_; ++i) {
        for (std::uint64_t bits = mask[i]; bits; bits &= bits - 1) {
            const int b = std::countr_zero(bits);
            const std::uint64_t* r = row(i * 64 + b);
            for (int j = i; j < words_; ++j) next[j] = mask[j] & r[j];
            next[i] &= ~((std::uint64_t{2} << b) - 1);
            total += count_in(masks, depth + 1, i, k - 1);
        }
    }
    return total;
}

std::uint64_t WideGraph::count_cliques(int k) const {
    if (k <= 0) return k == 0 ? 1 : 0;
    if (k == 1) return static_cast<std::uint64_t>(n_);
    // Each clique is counted once from its smallest vertex; masks[d] holds the
    // candidates above the last chosen vertex at depth d.
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(k) * static_cast<std::size_t>(words_));
    std::uint64_t total = 0;
    for (int u = 0; u < n_; ++u) {
        const std::uint64_t* r = row(u);
        const int i = u / 64;
        for (int j = i; j < words_; ++j) masks[static_cast<std::size_t>(j)] = r[j];
        masks[static_cast<std::size_t>(i)] &= ~((std::uint64_t{2} << (u % 64)) - 1);
        total += count_in(masks, 0, i, k - 1);
    }
    return total;
}

}  // namespace kanti
