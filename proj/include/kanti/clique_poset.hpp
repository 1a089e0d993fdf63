#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kanti/graph.hpp"
#include "kanti/set_family.hpp"

namespace kanti {

/// The cliques of G whose sizes lie in K \ {2}, ordered by (size, lex), with
/// an inclusion-comparability bitmask per element. An element's mask covers
/// itself. build() reuses storage so one instance can serve many graphs.
class CliquePoset {
   public:
    void build(const Graph& g, const KSpec& k);

    [[nodiscard]] std::size_t size() const { return cliques_.size(); }
    [[nodiscard]] std::size_t words() const { return words_; }
    [[nodiscard]] const std::vector<PointSet>& cliques() const { return cliques_; }
    [[nodiscard]] std::span<const std::uint64_t> comparable(std::size_t i) const {
        return {comparable_.data() + i * words_, words_};
    }

   private:
    std::vector<PointSet> cliques_;
    std::vector<std::uint64_t> comparable_;
    std::size_t words_ = 0;
};

/// Exact branch and bound for a minimum maximal antichain of a CliquePoset:
/// a set S of pairwise incomparable elements such that every element is
/// comparable with (or equal to) a member of S. This is the minimisation over
/// the admissible antichains of a graph, restricted to the levels above 2.
class MinMaximalAntichain {
   public:
    explicit MinMaximalAntichain(const CliquePoset& poset) : poset_(poset) {}

    /// A smallest solution with at most `budget` members that contains every
    /// index in `include` and none in `exclude`; nullopt if there is none.
    /// The returned indices are sorted.
    std::optional<std::vector<std::size_t>> solve(std::size_t budget, std::span<const std::size_t> include = {},
                                                  std::span<const std::size_t> exclude = {});

    /// Search nodes visited by the last solve().
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

   private:
    void search(std::size_t depth);

    const CliquePoset& poset_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> valid_;
    // Per depth: dominated mask then forbidden mask, each `words_` long.
    std::vector<std::uint64_t> stack_;
    std::vector<std::uint64_t> used_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
    std::size_t best_size_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace kanti
