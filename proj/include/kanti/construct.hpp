#pragma once

#include <cstdint>
#include <functional>

#include "kanti/graph.hpp"
#include "kanti/set_family.hpp"

namespace kanti {

/// Receives each edge (u, v), u < v, of an explicit construction exactly once.
using EdgeSink = std::function<void(int, int)>;

/// Part sizes of the complete-bipartite-plus-cliques construction for largest
/// level l: |A| is a multiple of floor(l/2), |B| of ceil(l/2), C is the rest.
struct Parts {
    int a;
    int b;
    int c;
};
[[nodiscard]] Parts general_parts(int n, int l);

/// A = 1..|A| split into consecutive floor(l/2)-cliques, B next split into
/// ceil(l/2)-cliques, all A-B pairs joined, C isolated.
void general_edges(int n, int l, const EdgeSink& sink);
/// The l = 4 construction refined by n mod 4 so that no vertex is wasted.
void l4_edges(int n, const EdgeSink& sink);

/// n <= 63. Throws unless 3 <= l = max K <= n.
[[nodiscard]] Graph general_graph(int n, const KSpec& k);
/// n <= 63. Throws for n < 4.
[[nodiscard]] Graph l4_graph(int n);

/// Conjectured maximum of |E| - |C_4| over {2,4}-saturated graphs on n vertices.
[[nodiscard]] std::int64_t f_conjecture(int n);
/// The matching conjectured minimum size of a maximal {2,4}-antichain.
[[nodiscard]] std::int64_t conjectured_min_antichain(int n);

/// |E| - (number of l-cliques), counted on the explicit construction graph
/// (l4 variant for l = 4). Any n >= l.
[[nodiscard]] std::int64_t construction_objective(int n, int l);

/// The closed form shown alongside the n = 4m + r case of the l = 4
/// construction, as a rational numerator over 16. For r = 3 the displayed
/// constant is +5, which does not divide evenly; see tests.
[[nodiscard]] std::int64_t l4_displayed_numerator(int n);

[[nodiscard]] constexpr std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace kanti
