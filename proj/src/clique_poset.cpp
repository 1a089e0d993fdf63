#include "kanti/clique_poset.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace kanti {

void CliquePoset::build(const Graph& g, const KSpec& k) {
    cliques_.clear();
    for (int level : k.upper_levels()) {
        auto level_cliques = g.k_cliques(level);
        cliques_.insert(cliques_.end(), level_cliques.begin(), level_cliques.end());
    }
    const std::size_t c = cliques_.size();
    words_ = std::max<std::size_t>(1, (c + 63) / 64);
    comparable_.assign(c * words_, 0);
    for (std::size_t i = 0; i < c; ++i) {
        comparable_[i * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
        const std::uint64_t a = cliques_[i].bits();
        for (std::size_t j = i + 1; j < c; ++j) {
            const std::uint64_t b = cliques_[j].bits();
            // Same-size elements are distinct and thus incomparable.
            if ((a & ~b) == 0 || (b & ~a) == 0) {
                comparable_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
                comparable_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
            }
        }
    }
}

std::optional<std::vector<std::size_t>> MinMaximalAntichain::solve(std::size_t budget,
                                                                     std::span<const std::size_t> include,
                                                                     std::span<const std::size_t> exclude) {
    const std::size_t c = poset_.size();
    words_ = poset_.words();
    nodes_ = 0;
    valid_.assign(words_, 0);
    for (std::size_t i = 0; i < c; ++i) valid_[i / 64] |= std::uint64_t{1} << (i % 64);
    stack_.assign((c + 2) * 2 * words_, 0);
    used_.assign(words_, 0);
    chosen_.clear();
    best_.clear();
    const std::size_t sentinel = budget == std::numeric_limits<std::size_t>::max() ? budget : budget + 1;
    best_size_ = sentinel;

    std::uint64_t* dominated = stack_.data();
    std::uint64_t* forbidden = dominated + words_;
    for (std::size_t idx : include) {
        const auto comp = poset_.comparable(idx);
        if ((dominated[idx / 64] >> (idx % 64)) & 1U) return std::nullopt;  // comparable with another forced member
        for (std::size_t w = 0; w < words_; ++w) dominated[w] |= comp[w];
        chosen_.push_back(idx);
    }
    for (std::size_t w = 0; w < words_; ++w) forbidden[w] = dominated[w];
    for (std::size_t idx : exclude) {
        if (std::find(include.begin(), include.end(), idx) != include.end()) return std::nullopt;
        forbidden[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    search(0);
    if (best_size_ == sentinel) return std::nullopt;
    std::sort(best_.begin(), best_.end());
    return best_;
}

void MinMaximalAntichain::search(std::size_t depth) {
    ++nodes_;
    if (chosen_.size() >= best_size_) return;
    const std::uint64_t* dominated = stack_.data() + depth * 2 * words_;
    const std::uint64_t* forbidden = dominated + words_;

    // Scan open elements: dead ends, a disjoint-chooser lower bound, and the
    // element with the fewest choosers to branch on.
    bool any_open = false;
    std::size_t branch_on = 0;
    int branch_options = std::numeric_limits<int>::max();
    std::size_t lower = 0;
    std::fill(used_.begin(), used_.end(), 0);
    for (std::size_t w = 0; w < words_; ++w) {
        for (std::uint64_t open = valid_[w] & ~dominated[w]; open; open &= open - 1) {
            const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(open));
            any_open = true;
            const auto comp = poset_.comparable(v);
            int options = 0;
            bool disjoint = true;
            for (std::size_t x = 0; x < words_; ++x) {
                const std::uint64_t choosers = comp[x] & ~forbidden[x];
                options += std::popcount(choosers);
                if (choosers & used_[x]) disjoint = false;
            }
            if (options == 0) return;
            if (disjoint) {
                // Elements with pairwise disjoint chooser sets need distinct members.
                ++lower;
                for (std::size_t x = 0; x < words_; ++x) used_[x] |= comp[x] & ~forbidden[x];
            }
            if (options < branch_options) {
                branch_options = options;
                branch_on = v;
            }
        }
    }
    if (!any_open) {
        best_size_ = chosen_.size();
        best_ = chosen_;
        return;
    }
    if (chosen_.size() + lower >= best_size_) return;

    // Candidates ordered by how many open elements they settle, most first.
    std::vector<std::pair<int, std::size_t>> options;
    const auto branch_comp = poset_.comparable(branch_on);
    for (std::size_t x = 0; x < words_; ++x) {
        for (std::uint64_t bits = branch_comp[x] & ~forbidden[x]; bits; bits &= bits - 1) {
            const std::size_t w = x * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            const auto comp = poset_.comparable(w);
            int gain = 0;
            for (std::size_t y = 0; y < words_; ++y) gain += std::popcount(comp[y] & valid_[y] & ~dominated[y]);
            options.emplace_back(-gain, w);
        }
    }
    std::sort(options.begin(), options.end());

    std::uint64_t* next_dominated = stack_.data() + (depth + 1) * 2 * words_;
    std::uint64_t* next_forbidden = next_dominated + words_;
    std::vector<std::uint64_t> tried(words_, 0);
    for (const auto& [neg_gain, w] : options) {
        if (chosen_.size() + 1 >= best_size_) return;
        const auto comp = poset_.comparable(w);
        for (std::size_t x = 0; x < words_; ++x) {
            next_dominated[x] = dominated[x] | comp[x];
            next_forbidden[x] = forbidden[x] | comp[x] | tried[x];
        }
        chosen_.push_back(w);
        search(depth + 1);
        chosen_.pop_back();
        tried[w / 64] |= std::uint64_t{1} << (w % 64);
    }
}

}  // namespace kanti
