#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kanti {

inline constexpr int kMaxGround = 63;

/// A subset of the ground set [n] = {1, ..., n}, stored in a single machine
/// word. Point i lives in bit i - 1, so no bit at position >= n is ever set.
class PointSet {
   public:
    constexpr PointSet() = default;

    explicit PointSet(int ground) : ground_(ground) { check_ground(ground); }

    /// Wraps a raw mask. Throws if a bit outside [n] is set.
    static PointSet from_bits(int ground, std::uint64_t bits) {
        PointSet s(ground);
        if (bits & ~full_mask(ground)) {
            throw std::invalid_argument("point set has a bit outside [1, " + std::to_string(ground) + "]");
        }
        s.bits_ = bits;
        return s;
    }

    static PointSet of(int ground, std::initializer_list<int> points) {
        return of(ground, std::span<const int>(points.begin(), points.size()));
    }

    static PointSet of(int ground, std::span<const int> points) {
        PointSet s(ground);
        for (int p : points) s.insert(p);
        return s;
    }

    static PointSet full(int ground) { return from_bits(ground, full_mask(ground)); }

    static constexpr std::uint64_t full_mask(int ground) {
        return ground >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground) - 1;
    }

    void insert(int point) {
        check_point(point);
        bits_ |= std::uint64_t{1} << (point - 1);
    }

    void erase(int point) {
        check_point(point);
        bits_ &= ~(std::uint64_t{1} << (point - 1));
    }

    [[nodiscard]] constexpr bool contains(int point) const {
        return point >= 1 && point <= ground_ && ((bits_ >> (point - 1)) & 1U);
    }

    [[nodiscard]] constexpr int ground() const { return ground_; }
    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr int cardinality() const { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }

    [[nodiscard]] constexpr bool is_subset_of(const PointSet& other) const { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] constexpr bool comparable_with(const PointSet& other) const {
        return is_subset_of(other) || other.is_subset_of(*this);
    }

    /// Points in increasing order.
    [[nodiscard]] std::vector<int> points() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(cardinality()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend constexpr bool operator==(const PointSet&, const PointSet&) = default;

    friend constexpr PointSet operator|(PointSet a, const PointSet& b) {
        a.bits_ |= b.bits_;
        return a;
    }
    friend constexpr PointSet operator&(PointSet a, const PointSet& b) {
        a.bits_ &= b.bits_;
        return a;
    }
    friend constexpr PointSet operator-(PointSet a, const PointSet& b) {
        a.bits_ &= ~b.bits_;
        return a;
    }

   private:
    static void check_ground(int ground) {
        if (ground < 0 || ground > kMaxGround) {
            throw std::invalid_argument("ground size " + std::to_string(ground) + " outside [0, 63]");
        }
    }
    void check_point(int point) const {
        if (point < 1 || point > ground_) {
            throw std::out_of_range("point " + std::to_string(point) + " outside [1, " + std::to_string(ground_) + "]");
        }
    }

    std::uint64_t bits_ = 0;
    int ground_ = 0;
};

/// Lexicographic order on the increasing point sequences of two masks:
/// {1,2,5} < {1,3} < {1,3,4} < {2}.
constexpr bool lex_less(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    const std::uint64_t low = diff & (~diff + 1);
    const std::uint64_t above = ~((low << 1) - 1);
    if (a & low) return (b & above) != 0;
    return (a & above) == 0;
}

constexpr bool lex_less(const PointSet& a, const PointSet& b) { return lex_less(a.bits(), b.bits()); }

struct LexLess {
    constexpr bool operator()(const PointSet& a, const PointSet& b) const { return lex_less(a, b); }
};

}  // namespace kanti
