#include "kanti/construct.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kanti {
namespace {

void emit(const EdgeSink& sink, int u, int v) { u < v ? sink(u, v) : sink(v, u); }

void cliques_on_blocks(int first, int count, int block, const EdgeSink& sink) {
    for (int start = first; start < first + count; start += block) {
        for (int u = start; u < start + block; ++u) {
            for (int v = u + 1; v < start + block; ++v) emit(sink, u, v);
        }
    }
}

void require_level(int n, int l) {
    if (l < 3) throw std::invalid_argument("largest level must be at least 3");
    if (n < l) throw std::invalid_argument("n = " + std::to_string(n) + " is below the largest level " + std::to_string(l));
}

Graph collect(int n, const std::function<void(const EdgeSink&)>& build) {
    std::vector<Edge> edges;
    build([&](int u, int v) { edges.emplace_back(u, v); });
    return Graph::from_edges(n, edges);
}

}  // namespace

Parts general_parts(int n, int l) {
    require_level(n, l);
    const int lo = l / 2;
    const int hi = (l + 1) / 2;
    const int a = (n / 2) / lo * lo;
    const int b = ((n + 1) / 2) / hi * hi;
    return {a, b, n - a - b};
}

void general_edges(int n, int l, const EdgeSink& sink) {
    require_level(n, l);
    const Parts p = general_parts(n, l);
    cliques_on_blocks(1, p.a, l / 2, sink);
    cliques_on_blocks(p.a + 1, p.b, (l + 1) / 2, sink);
    for (int u = 1; u <= p.a; ++u) {
        for (int v = p.a + 1; v <= p.a + p.b; ++v) emit(sink, u, v);
    }
}

void l4_edges(int n, const EdgeSink& sink) {
    if (n < 4) throw std::invalid_argument("the l = 4 construction needs n >= 4");
    const int m = n / 4;
    const int r = n % 4;
    const int a_end = 2 * m;
    // A is joined to 2m+1..b_end; for r = 1 that includes the extra vertex 4m + 1.
    const int b_end = r == 0 ? 4 * m : (r == 1 ? 4 * m + 1 : 4 * m + 2);
    for (int i = 1; i <= a_end; ++i) {
        for (int j = a_end + 1; j <= b_end; ++j) emit(sink, i, j);
    }
    if (r == 3) {
        for (int j = a_end + 1; j <= b_end; ++j) emit(sink, 4 * m + 3, j);
    }
    const int pairs = (r == 2 || r == 3) ? 2 * m + 1 : 2 * m;
    for (int i = 1; i <= pairs; ++i) emit(sink, 2 * i - 1, 2 * i);
    if (r == 1) emit(sink, 4 * m, 4 * m + 1);
    if (r == 3) emit(sink, 2 * m, 4 * m + 3);
}

Graph general_graph(int n, const KSpec& k) {
    const int l = k.max();
    require_level(n, l);
    return collect(n, [&](const EdgeSink& sink) { general_edges(n, l, sink); });
}

Graph l4_graph(int n) {
    return collect(n, [&](const EdgeSink& sink) { l4_edges(n, sink); });
}

std::int64_t f_conjecture(int n) {
    const std::int64_t x = n;
    if (n % 2 == 0) return (3 * x * x + 8 * x) / 16;
    return (3 * x * x + 6 * x + 15) / 16;
}

std::int64_t conjectured_min_antichain(int n) {
    const std::int64_t x = n;
    if (n % 2 == 0) return (5 * x * x - 16 * x + 15) / 16;
    return (5 * x * x - 14 * x) / 16;
}

std::int64_t construction_objective(int n, int l) {
    require_level(n, l);
    WideGraph g(n);
    const EdgeSink sink = [&](int u, int v) { g.add_edge(u, v); };
    if (l == 4) {
        l4_edges(n, sink);
    } else {
        general_edges(n, l, sink);
    }
    return static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.count_cliques(l));
}

std::int64_t l4_displayed_numerator(int n) {
    const std::int64_t x = n;
    switch (n % 4) {
        case 0:
            return 3 * x * x + 8 * x;
        case 1:
            return 3 * x * x + 6 * x + 7;
        case 2:
            return 3 * x * x + 8 * x - 12;
        default:
            return 3 * x * x + 6 * x + 5;
    }
}

}  // namespace kanti
