#include "mapcensus/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "mapcensus/map_json.hpp"
#include "mapcensus/quad.hpp"

namespace mapcensus {

ColoredMap MapClass::colored() const {
  if (!colors) throw Error("MapClass::colored: class " + id + " carries no colors");
  return ColoredMap(map, *colors);
}

const MapClass& Catalog::by_id(const std::string& id) const {
  for (const auto& c : classes)
    if (c.id == id) return c;
  throw Error("Catalog: no class with id " + id);
}

const MapClass* Catalog::find_code(const std::string& bytes) const {
  for (const auto& c : classes)
    if (c.code.bytes == bytes) return &c;
  return nullptr;
}

namespace {

// --- fixed-alpha enumeration ------------------------------------------------
// alpha = (0 1)(2 3)...; sigma generated by cycle-structure recursion: each
// dart either opens a new cycle or splices after an earlier dart, pruned by
// the reachable cycle-count window.

int count_cycles(const std::vector<Dart>& p) {
  std::vector<char> seen(p.size(), 0);
  int k = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    ++k;
    for (Dart d = static_cast<Dart>(s); !seen[d]; d = p[d]) seen[d] = 1;
  }
  return k;
}

bool vectors_connected(const std::vector<Dart>& sigma, const std::vector<Dart>& alpha) {
  std::vector<char> seen(sigma.size(), 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart nb : {sigma[d], alpha[d]}) {
      if (!seen[nb]) {
        seen[nb] = 1;
        ++visited;
        stack.push_back(nb);
      }
    }
  }
  return visited == sigma.size();
}

template <typename Fn>
void for_each_sigma_with_cycles(int n, int target_cycles, Fn&& emit) {
  std::vector<Dart> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i;
  auto rec = [&](auto&& self, int i, int cycles) -> void {
    if (i == n) {
      if (cycles == target_cycles) emit(sigma);
      return;
    }
    const int remaining = n - i;
    if (cycles < target_cycles) {
      // open a new cycle (sigma[i] already = i)
      self(self, i + 1, cycles + 1);
    }
    if (cycles + remaining - 1 >= target_cycles) {
      for (int j = 0; j < i; ++j) {
        const Dart old = sigma[j];
        sigma[j] = i;
        sigma[i] = old;
        self(self, i + 1, cycles);
        sigma[j] = old;
        sigma[i] = i;
      }
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<OrientedMap> enumerate_plane_maps(int vertices, int faces) {
  const int edges = vertices + faces - 2;
  if (vertices < 1 || faces < 1 || edges < 1)
    throw Error("enumerate_plane_maps: infeasible profile V=" + std::to_string(vertices) +
                " F=" + std::to_string(faces));
  const int n = 2 * edges;
  std::vector<Dart> alpha(n);
  for (int i = 0; i < n; i += 2) {
    alpha[i] = i + 1;
    alpha[i + 1] = i;
  }

  std::map<std::string, OrientedMap> by_code;
  std::vector<Dart> phi(n);
  for_each_sigma_with_cycles(n, vertices, [&](const std::vector<Dart>& sigma) {
    for (int d = 0; d < n; ++d) phi[d] = sigma[alpha[d]];
    if (count_cycles(phi) != faces) return;
    if (!vectors_connected(sigma, alpha)) return;
    OrientedMap m{Permutation(alpha), Permutation(sigma)};
    OrientedMap form = canonical_form(m);
    by_code.emplace(canonical_code(form).bytes, std::move(form));
  });

  std::vector<OrientedMap> out;
  out.reserve(by_code.size());
  for (auto& [code, m] : by_code) out.push_back(std::move(m));
  return out;
}

namespace {

std::string padded_id(char prefix, int i) {
  return std::string(1, prefix) + (i < 10 ? "0" : "") + std::to_string(i);
}

MapClass make_class(std::string id, OrientedMap map, std::optional<std::vector<Color>> colors,
                    CanonicalCode code) {
  Counts counts = map.counts();
  std::vector<int> degs = map.face_degrees();
  return MapClass{std::move(id), std::move(map), std::move(colors),
                  std::move(code), counts,       std::move(degs),
                  std::nullopt};
}

}  // namespace

Catalog build_m33() {
  Catalog cat{CatalogKind::m33, {}};
  int i = 0;
  for (OrientedMap& m : enumerate_plane_maps(3, 3)) {
    CanonicalCode code = canonical_code(m);
    cat.classes.push_back(make_class(padded_id('W', ++i), std::move(m), std::nullopt,
                                     std::move(code)));
  }
  // mirror partners (orientation reversal); amphichiral classes get none
  for (auto& c : cat.classes) {
    const std::string mc = canonical_code(mirror(c.map)).bytes;
    if (mc != c.code.bytes) {
      const MapClass* p = cat.find_code(mc);
      if (!p) throw Error("build_m33: mirror image of " + c.id + " missing from catalog");
      c.partner = p->id;
    }
  }
  return cat;
}

M446Build build_m446(const Catalog& m33) {
  if (m33.kind != CatalogKind::m33) throw Error("build_m446: expected the m33 catalog");
  std::map<std::string, ColoredMap> by_code;
  struct RawEvent {
    std::string white_id;
    Dart edge_dart;
    std::string code;
  };
  std::vector<RawEvent> raw_events;

  for (const auto& cls : m33.classes) {
    const ColoredMap q = quadrangulate(cls.map);
    for (Dart e : separating_edges(q.base())) {
      ColoredMap deleted = delete_separating_edge(q, e);
      ColoredMap form = canonical_form(deleted);
      std::string code = canonical_code(form).bytes;
      by_code.emplace(code, std::move(form));
      raw_events.push_back({cls.id, e, std::move(code)});
    }
  }

  M446Build out{Catalog{CatalogKind::m446, {}}, {}};
  std::map<std::string, std::string> id_of_code;
  int i = 0;
  for (auto& [code, m] : by_code) {
    const std::string id = padded_id('B', ++i);
    id_of_code[code] = id;
    out.catalog.classes.push_back(
        make_class(id, m.base(), m.vertex_colors(), canonical_code(m)));
  }
  for (auto& ev : raw_events)
    out.events.push_back({ev.white_id, ev.edge_dart, id_of_code.at(ev.code)});
  return out;
}

PairingReport pair_primes(Catalog& m446) {
  if (m446.kind != CatalogKind::m446) throw Error("pair_primes: expected the m446 catalog");
  auto images = [&](const MapClass& c) {
    const ColoredMap m = c.colored();
    std::array<std::string, 3> out = {canonical_code(mirror(m)).bytes,
                                      canonical_code(color_swap(m)).bytes,
                                      canonical_code(mirror(color_swap(m))).bytes};
    return out;
  };

  PairingReport report;
  std::map<std::string, std::string> matched;  // id -> partner id
  for (auto& c : m446.classes) {
    if (matched.count(c.id)) continue;
    std::vector<std::string> candidates;
    for (const std::string& code : images(c)) {
      if (code == c.code.bytes) continue;
      const MapClass* p = m446.find_code(code);
      if (!p) throw Error("pair_primes: image of " + c.id + " missing from catalog");
      if (!matched.count(p->id)) candidates.push_back(p->id);
    }
    if (candidates.empty()) {
      const bool fixed_by_all = images(c) == std::array<std::string, 3>{
                                                 c.code.bytes, c.code.bytes, c.code.bytes};
      if (!fixed_by_all)
        throw Error("pair_primes: " + c.id + " stranded (orbit not greedily matchable)");
      report.singletons.push_back(c.id);
      continue;
    }
    const std::string partner = *std::min_element(candidates.begin(), candidates.end());
    matched[c.id] = partner;
    matched[partner] = c.id;
    report.pairs.emplace_back(c.id, partner);
  }
  for (auto& c : m446.classes) {
    auto it = matched.find(c.id);
    if (it != matched.end()) c.partner = it->second;
  }
  return report;
}

nlohmann::json catalog_to_json(const Catalog& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : c.classes) {
    nlohmann::json map_j =
        cls.colors ? map_to_json(ColoredMap(cls.map, *cls.colors)) : map_to_json(cls.map);
    nlohmann::json entry{{"id", cls.id},
                         {"map", std::move(map_j)},
                         {"code", cls.code.bytes},
                         {"counts", {cls.counts.vertices, cls.counts.edges, cls.counts.faces}},
                         {"face_degrees", cls.face_degrees},
                         {"automorphisms", cls.code.automorphisms}};
    entry["partner"] = cls.partner ? nlohmann::json(*cls.partner) : nlohmann::json();
    classes.push_back(std::move(entry));
  }
  return nlohmann::json{{"kind", c.kind == CatalogKind::m33 ? "m33" : "m446"},
                        {"classes", std::move(classes)}};
}

}  // namespace mapcensus
