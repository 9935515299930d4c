#pragma once

#include <json.hpp>

#include "mapcensus/oriented_map.hpp"

namespace mapcensus {

// Interchange schema:
//   {"n_darts": N, "alpha": [..N ints..], "sigma": [..N ints..],
//    "colors": ["w"|"b", ...]}          // optional, one entry per vertex,
//                                        // vertices ordered by least dart
nlohmann::json map_to_json(const OrientedMap& m);
nlohmann::json map_to_json(const ColoredMap& m);

OrientedMap map_from_json(const nlohmann::json& j);
ColoredMap colored_map_from_json(const nlohmann::json& j);
bool json_has_colors(const nlohmann::json& j);

}  // namespace mapcensus
