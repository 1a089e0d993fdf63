#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kanti/point_set.hpp"

namespace kanti {

/// Member counts by cardinality.
using Profile = std::map<int, std::size_t>;

/// An ordered list of subsets of a common ground set [n]. Duplicates are
/// representable; the antichain predicates reject them.
class SetFamily {
   public:
    SetFamily() = default;
    explicit SetFamily(int ground) : ground_(PointSet(ground).ground()) {}
    SetFamily(int ground, std::vector<PointSet> members);

    /// Builds from point lists, e.g. {{1,2},{2,3}}.
    static SetFamily of(int ground, const std::vector<std::vector<int>>& sets);

    void push_back(const PointSet& s);

    [[nodiscard]] int ground() const { return ground_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] const std::vector<PointSet>& members() const { return members_; }
    [[nodiscard]] const PointSet& operator[](std::size_t i) const { return members_[i]; }
    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }

    /// Members of cardinality k, in family order.
    [[nodiscard]] SetFamily level(int k) const;
    [[nodiscard]] bool contains(const PointSet& s) const;
    [[nodiscard]] bool has_duplicates() const;

    /// Sorted by (cardinality, lexicographic).
    [[nodiscard]] SetFamily sorted() const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

   private:
    int ground_ = 0;
    std::vector<PointSet> members_;
};

/// Admissible level set K = {2 = k_1 < k_2 < ... < k_r} with r >= 2.
class KSpec {
   public:
    explicit KSpec(std::vector<int> levels);

    /// Parses "2,3,4".
    static KSpec parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& levels() const { return levels_; }
    /// K without 2.
    [[nodiscard]] std::vector<int> upper_levels() const { return {levels_.begin() + 1, levels_.end()}; }
    [[nodiscard]] int kstar() const { return levels_[1]; }
    [[nodiscard]] int max() const { return levels_.back(); }
    [[nodiscard]] std::size_t size() const { return levels_.size(); }
    [[nodiscard]] bool contains(int k) const;
    [[nodiscard]] std::string to_string() const;

    /// Throws unless max() <= n.
    void require_fits(int n) const;

    friend bool operator==(const KSpec&, const KSpec&) = default;

   private:
    std::vector<int> levels_;
};

[[nodiscard]] bool is_antichain(const SetFamily& family);
[[nodiscard]] bool is_k_antichain(const SetFamily& family, const KSpec& k);
[[nodiscard]] Profile profile(const SetFamily& family);
/// Profile as a vector over the levels of K, zeros included.
[[nodiscard]] std::vector<std::size_t> profile_vector(const Profile& p, const KSpec& k);
[[nodiscard]] std::string format_profile(const Profile& p, const KSpec& k);

/// Dual family: block X_i = { j : i in A_j } over ground |F|, one block per
/// ground point, member indices taken from input order.
[[nodiscard]] SetFamily dual(const SetFamily& family);

/// Completely separating system test over the family's ground set.
[[nodiscard]] bool is_css(const SetFamily& blocks);

}  // namespace kanti
