#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mapcensus/canonical.hpp"
#include "mapcensus/oriented_map.hpp"

namespace mapcensus {

// One isomorphism class.  map is the canonical-form representative, so
// rebuilding the catalog always reproduces identical bytes.  colors (per
// vertex) are present exactly for bipartite catalogs deduped under
// color-preserving isomorphism.
struct MapClass {
  std::string id;
  OrientedMap map;
  std::optional<std::vector<Color>> colors;
  CanonicalCode code;
  Counts counts;
  std::vector<int> face_degrees;
  std::optional<std::string> partner;

  ColoredMap colored() const;  // throws when colors are absent
};

enum class CatalogKind { m33, m446 };

struct Catalog {
  CatalogKind kind;
  std::vector<MapClass> classes;  // sorted by code bytes; ids assigned in that order

  const MapClass& by_id(const std::string& id) const;         // throws on miss
  const MapClass* find_code(const std::string& bytes) const;  // nullptr on miss
};

// All plane (genus 0) maps with the given vertex and face counts, up to
// orientation-preserving isomorphism: fixed standard alpha, pruned generation
// of sigma by cycle count, canonical-code dedupe.  Returned as canonical
// forms sorted by code.
std::vector<OrientedMap> enumerate_plane_maps(int vertices, int faces);

// The 3-vertex 3-face plane maps, ids W01.., partner = mirror partner id.
Catalog build_m33();

// Deleting one separating edge of a quadrangulation, remembered per source
// class and edge (edge named by its lesser dart in quadrangulate(rep)).
struct DeletionEvent {
  std::string white_id;
  Dart edge_dart;
  std::string black_id;
};

struct M446Build {
  Catalog catalog;
  std::vector<DeletionEvent> events;
};

// Every separating-edge deletion from every W-class quadrangulation, deduped
// by colored canonical code; ids B01.. in code order.
M446Build build_m446(const Catalog& m33);

struct PairingReport {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> singletons;
};

// Fill partner fields under the Klein group {mirror, color swap, both}.
// Orbits can have size 4 (two pairs in one orbit), so partners are assigned
// greedily in id order: partner(c) = least-code unmatched nontrivial image.
// Any two elements of an orbit differ by a group element, which makes the
// greedy matching a well-defined involution.
PairingReport pair_primes(Catalog& m446);

nlohmann::json catalog_to_json(const Catalog& c);

}  // namespace mapcensus
