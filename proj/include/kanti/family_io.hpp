#pragma once

#include <string>
#include <string_view>

#include "kanti/set_family.hpp"

namespace kanti {

/// Text notation for families. Sets are separated by commas and/or
/// whitespace. A set is either a compact word, one character per point
/// ('1'..'9' then 'a'..'f' for 10..15, so n <= 15), or a braced list such as
/// {1,2,10} which works for any n. "{}" is the empty set.
///
///   parse_family("1245,2367,16", 9)
[[nodiscard]] SetFamily parse_family(std::string_view text, int ground);
[[nodiscard]] PointSet parse_set(std::string_view text, int ground);

/// Canonical text: compact words when n <= 15, braced lists otherwise; members
/// in family order joined by ','.
[[nodiscard]] std::string format_family(const SetFamily& family);
[[nodiscard]] std::string format_set(const PointSet& s);

}  // namespace kanti
