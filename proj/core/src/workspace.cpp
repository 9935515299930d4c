#include "mapcensus/workspace.hpp"

#include <random>

#include "mapcensus/quad.hpp"

namespace mapcensus {

Workspace build_workspace(std::optional<std::uint32_t> circuit_seed) {
  Workspace ws;
  ws.m33 = build_m33();
  ws.m446 = build_m446(ws.m33);
  ws.pairing = pair_primes(ws.m446.catalog);

  std::optional<std::mt19937> rng;
  if (circuit_seed) rng.emplace(*circuit_seed);

  for (const auto& cls : ws.m33.classes) {
    const ColoredMap q = quadrangulate(cls.map);
    ws.white_raw[cls.id] = rng ? white_word(q, ws.m446.catalog, *rng)
                               : white_word(q, ws.m446.catalog);
  }
  for (const auto& cls : ws.m446.catalog.classes)
    ws.black_raw[cls.id] = black_word(cls.colored(), ws.m33);

  for (const auto& [id, w] : ws.white_raw) ws.white_reduced[id] = reduce_white_word(w);
  for (const auto& [id, w] : ws.black_raw)
    ws.black_reduced[id] = reduce_black_word(w, id, ws.white_raw);
  return ws;
}

}  // namespace mapcensus
