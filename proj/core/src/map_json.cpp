#include "mapcensus/map_json.hpp"

namespace mapcensus {

using nlohmann::json;

namespace {

json permutation_to_json(const Permutation& p) {
  return json(p.image());
}

Permutation permutation_from_json(const json& j, const char* key, int n) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(std::string("map_from_json: missing array field \"") + key + "\"");
  std::vector<Dart> img;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer())
      throw Error(std::string("map_from_json: non-integer entry in \"") + key + "\"");
    img.push_back(v.get<Dart>());
  }
  if (static_cast<int>(img.size()) != n)
    throw Error(std::string("map_from_json: \"") + key + "\" has " +
                std::to_string(img.size()) + " entries, expected " + std::to_string(n));
  return Permutation(std::move(img));
}

}  // namespace

json map_to_json(const OrientedMap& m) {
  return json{{"n_darts", m.n_darts()},
              {"alpha", permutation_to_json(m.alpha())},
              {"sigma", permutation_to_json(m.sigma())}};
}

json map_to_json(const ColoredMap& m) {
  json j = map_to_json(m.base());
  json colors = json::array();
  for (Color c : m.vertex_colors()) colors.push_back(c == Color::white ? "w" : "b");
  j["colors"] = std::move(colors);
  return j;
}

OrientedMap map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n_darts") || !j["n_darts"].is_number_integer())
    throw Error("map_from_json: expected an object with integer \"n_darts\"");
  const int n = j["n_darts"].get<int>();
  return OrientedMap(permutation_from_json(j, "alpha", n),
                     permutation_from_json(j, "sigma", n));
}

bool json_has_colors(const json& j) {
  return j.is_object() && j.contains("colors");
}

ColoredMap colored_map_from_json(const json& j) {
  OrientedMap base = map_from_json(j);
  if (!json_has_colors(j) || !j["colors"].is_array())
    throw Error("colored_map_from_json: missing \"colors\" array");
  std::vector<Color> colors;
  for (const auto& c : j["colors"]) {
    const std::string s = c.is_string() ? c.get<std::string>() : std::string();
    if (s == "w")
      colors.push_back(Color::white);
    else if (s == "b")
      colors.push_back(Color::black);
    else
      throw Error("colored_map_from_json: color entries must be \"w\" or \"b\"");
  }
  return ColoredMap(std::move(base), std::move(colors));
}

}  // namespace mapcensus
