#pragma once

#include <compare>
#include <string>

#include "mapcensus/oriented_map.hpp"

namespace mapcensus {

// Canonical encoding of a map up to orientation-preserving isomorphism
// (color-preserving as well in the colored variant).  bytes is a printable
// fixed-width-hex serialization of the sigma/alpha tables relabeled by a
// deterministic traversal from the best root; automorphisms counts the roots
// attaining the minimum, which equals |Aut| because the automorphism group
// acts freely on darts.
struct CanonicalCode {
  std::string bytes;
  int automorphisms = 0;

  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const OrientedMap& m);
CanonicalCode canonical_code(const ColoredMap& m);

// The map relabeled into the minimal encoding; two isomorphic maps have
// identical (==) canonical forms.
OrientedMap canonical_form(const OrientedMap& m);
ColoredMap canonical_form(const ColoredMap& m);

}  // namespace mapcensus
