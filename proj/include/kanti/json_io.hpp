#pragma once

#include <json.hpp>

#include "kanti/duality.hpp"
#include "kanti/graph.hpp"
#include "kanti/search.hpp"
#include "kanti/set_family.hpp"

namespace kanti {

using Json = nlohmann::json;

/// {"n": int, "sets": [[int, ...], ...]}
[[nodiscard]] Json to_json(const SetFamily& family);
[[nodiscard]] SetFamily family_from_json(const Json& j);

/// {"n": int, "edges": [[u, v], ...]}, edges in lexicographic order.
[[nodiscard]] Json to_json(const Graph& g);
[[nodiscard]] Graph graph_from_json(const Json& j);

/// {"n", "K", "graph_edges", "antichain": {"2": [...], "<k>": [...]}}
[[nodiscard]] Json to_json(const AdmissibleAntichain& a);

[[nodiscard]] Json to_json(const Profile& p);
[[nodiscard]] Json to_json(const SearchResult& r);
[[nodiscard]] Json to_json(const WitnessReport& r);

}  // namespace kanti
