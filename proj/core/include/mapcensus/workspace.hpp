#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "mapcensus/catalog.hpp"
#include "mapcensus/words.hpp"

namespace mapcensus {

// Everything the pipeline derives from scratch: both catalogs, the prime
// pairing, and the four cyclic-word tables keyed by computed ids (white words
// spell B-ids, black words spell W-ids).
struct Workspace {
  Catalog m33;
  M446Build m446;
  PairingReport pairing;
  std::map<std::string, CyclicWord> white_raw;
  std::map<std::string, CyclicWord> black_raw;
  std::map<std::string, CyclicWord> white_reduced;
  std::map<std::string, CyclicWord> black_reduced;
};

// circuit_seed randomizes the Eulerian tie-breaks in the white words (the
// only free choice in the pipeline); nullopt takes the canonical circuit.
Workspace build_workspace(std::optional<std::uint32_t> circuit_seed = std::nullopt);

}  // namespace mapcensus
