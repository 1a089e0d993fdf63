#include "kanti/set_family.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace kanti {

SetFamily::SetFamily(int ground, std::vector<PointSet> members) : SetFamily(ground) {
    members_.reserve(members.size());
    for (const auto& m : members) push_back(m);
}

SetFamily SetFamily::of(int ground, const std::vector<std::vector<int>>& sets) {
    SetFamily f(ground);
    for (const auto& s : sets) f.push_back(PointSet::of(ground, std::span<const int>(s)));
    return f;
}

void SetFamily::push_back(const PointSet& s) {
    if (s.ground() != ground_) {
        throw std::invalid_argument("member over ground " + std::to_string(s.ground()) +
                                    " added to family over ground " + std::to_string(ground_));
    }
    members_.push_back(s);
}

SetFamily SetFamily::level(int k) const {
    SetFamily out(ground_);
    for (const auto& m : members_) {
        if (m.cardinality() == k) out.members_.push_back(m);
    }
    return out;
}

bool SetFamily::contains(const PointSet& s) const {
    return std::find(members_.begin(), members_.end(), s) != members_.end();
}

bool SetFamily::has_duplicates() const {
    std::vector<std::uint64_t> bits;
    bits.reserve(members_.size());
    for (const auto& m : members_) bits.push_back(m.bits());
    std::sort(bits.begin(), bits.end());
    return std::adjacent_find(bits.begin(), bits.end()) != bits.end();
}

SetFamily SetFamily::sorted() const {
    SetFamily out = *this;
    std::sort(out.members_.begin(), out.members_.end(), [](const PointSet& a, const PointSet& b) {
        if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
        return lex_less(a, b);
    });
    return out;
}

KSpec::KSpec(std::vector<int> levels) : levels_(std::move(levels)) {
    if (levels_.empty() || levels_.front() != 2) {
        throw std::invalid_argument("K must contain 2 as its smallest element");
    }
    for (std::size_t i = 1; i < levels_.size(); ++i) {
        if (levels_[i] <= levels_[i - 1]) throw std::invalid_argument("K must be strictly increasing");
    }
    if (levels_.size() < 2) {
        throw std::invalid_argument("K = {2} is degenerate: K \\ {2} must be nonempty");
    }
    if (levels_.back() > kMaxGround) throw std::invalid_argument("K exceeds the ground-set cap");
}

KSpec KSpec::parse(std::string_view text) {
    std::vector<int> levels;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int value = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
            throw std::invalid_argument("malformed K: '" + std::string(text) + "'");
        }
        levels.push_back(value);
        pos = comma + 1;
    }
    return KSpec(std::move(levels));
}

bool KSpec::contains(int k) const { return std::binary_search(levels_.begin(), levels_.end(), k); }

std::string KSpec::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < levels_.size(); ++i) out << (i ? "," : "") << levels_[i];
    out << '}';
    return out.str();
}

void KSpec::require_fits(int n) const {
    if (max() > n) {
        throw std::invalid_argument("max K = " + std::to_string(max()) + " exceeds n = " + std::to_string(n));
    }
}

bool is_antichain(const SetFamily& family) {
    if (family.has_duplicates()) throw std::invalid_argument("family has duplicate members");
    const auto& m = family.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (m[i].comparable_with(m[j])) return false;
        }
    }
    return true;
}

bool is_k_antichain(const SetFamily& family, const KSpec& k) {
    if (!is_antichain(family)) return false;
    return std::all_of(family.begin(), family.end(), [&](const PointSet& s) { return k.contains(s.cardinality()); });
}

Profile profile(const SetFamily& family) {
    Profile p;
    for (const auto& s : family) ++p[s.cardinality()];
    return p;
}

std::vector<std::size_t> profile_vector(const Profile& p, const KSpec& k) {
    std::vector<std::size_t> out;
    for (int level : k.levels()) {
        const auto it = p.find(level);
        out.push_back(it == p.end() ? 0 : it->second);
    }
    return out;
}

std::string format_profile(const Profile& p, const KSpec& k) {
    std::ostringstream out;
    out << '(';
    const auto v = profile_vector(p, k);
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ')';
    return out.str();
}

SetFamily dual(const SetFamily& family) {
    const int m = static_cast<int>(family.size());
    if (m > kMaxGround) {
        throw std::invalid_argument("dual of a family with " + std::to_string(m) + " members exceeds the ground cap");
    }
    SetFamily out(m);
    for (int i = 1; i <= family.ground(); ++i) {
        PointSet block(m);
        for (int j = 0; j < m; ++j) {
            if (family[static_cast<std::size_t>(j)].contains(i)) block.insert(j + 1);
        }
        out.push_back(block);
    }
    return out;
}

bool is_css(const SetFamily& blocks) {
    const int n = blocks.ground();
    // Point a is separated from b iff some block holds a but not b.
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            const bool separated = std::any_of(blocks.begin(), blocks.end(),
                                               [&](const PointSet& s) { return s.contains(a) && !s.contains(b); });
            if (!separated) return false;
        }
    }
    return true;
}

}  // namespace kanti
