#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kanti/graph.hpp"
#include "kanti/set_family.hpp"

namespace kanti {

/// A maximal K-antichain together with the graph it induces. Instances built
/// by this library always satisfy the three membership conditions of the
/// antichain class of the graph:
///   1. the 2-sets are exactly the non-edges,
///   2. every larger member spans a clique,
///   3. every clique of size in K \ {2} is comparable with some member.
struct AdmissibleAntichain {
    Graph graph;
    KSpec k;
    SetFamily family;

    [[nodiscard]] std::size_t size() const { return family.size(); }
    /// Number of members of size in K \ {2}.
    [[nodiscard]] std::size_t upper_size() const;
    [[nodiscard]] SetFamily level(int k) const { return family.level(k); }
};

/// Graph on [n] whose edges are the pairs missing from the 2-level of A.
[[nodiscard]] Graph graph_of(const SetFamily& antichain);

/// Every edge lies in a k-clique for some k in K \ {2}.
[[nodiscard]] bool is_k_saturated(const Graph& g, const KSpec& k);

/// The k-cliques of G contained in no k'-clique with k' in K, k' > k.
[[nodiscard]] std::vector<PointSet> unsaturated_cliques(const Graph& g, const KSpec& k, int level);

/// Non-edges plus every unsaturated clique. Throws if G is not K-saturated.
[[nodiscard]] AdmissibleAntichain canonical_antichain(const Graph& g, const KSpec& k);

/// Every member M of the canonical antichain's upper part contains a
/// k*-clique lying in no other upper member.
[[nodiscard]] bool is_k_sparse(const Graph& g, const KSpec& k);

/// Some set whose size is in `sizes` that can be added to the antichain while
/// keeping it an antichain, or nullopt if none exists.
[[nodiscard]] std::optional<PointSet> find_addable(const SetFamily& antichain, const std::vector<int>& sizes);

/// Throws if A is not a K-antichain.
[[nodiscard]] bool is_maximal_k_antichain(const SetFamily& a, const KSpec& k);
/// Maximal among all antichains on [n]. Throws if A is not an antichain.
[[nodiscard]] bool is_strongly_maximal(const SetFamily& a);

/// The clique condition characterising strong maximality of the canonical
/// antichain: for consecutive levels k_i < q < k_{i+1}, every q-clique either
/// contains a k_i-clique in no k_{i+1}-clique or lies in a k_{i+1}-clique.
[[nodiscard]] bool lemma3_holds(const Graph& g, const KSpec& k);

/// Why a family fails to be an admissible antichain for (G, K), or nullopt.
[[nodiscard]] std::optional<std::string> admissibility_failure(const Graph& g, const KSpec& k, const SetFamily& a);
/// Wraps a family after checking admissibility; throws with the failure reason.
[[nodiscard]] AdmissibleAntichain make_admissible(const Graph& g, const KSpec& k, const SetFamily& a);

/// An admissible antichain for G with the fewest members of size in K \ {2}.
/// Ties go to the lexicographically least sorted member list. Throws if G is
/// not K-saturated.
[[nodiscard]] AdmissibleAntichain min_antichain_for_graph(const Graph& g, const KSpec& k);

/// |E| minus the number of members of size in K \ {2}.
[[nodiscard]] long long objective(const Graph& g, const AdmissibleAntichain& a);

}  // namespace kanti
