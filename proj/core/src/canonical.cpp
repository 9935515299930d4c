#include "mapcensus/canonical.hpp"

#include <array>
#include <optional>
#include <utility>

namespace mapcensus {

namespace {

constexpr char kHex[] = "0123456789abcdef";

void append_hex2(std::string& out, int v) {
  out.push_back(kHex[(v >> 4) & 0xf]);
  out.push_back(kHex[v & 0xf]);
}

// Deterministic BFS relabeling from a root: visit darts in assigned-label
// order, numbering sigma(d) then alpha(d) on first sight.  Isomorphic maps
// produce the same encoding from corresponding roots, so the minimum over
// roots is a complete isomorphism invariant.
struct RootEncoding {
  std::string bytes;
  std::vector<Dart> new_of_old;
};

RootEncoding encode_from_root(const OrientedMap& m, Dart root,
                              const std::vector<Color>* dart_colors) {
  const int n = m.n_darts();
  std::vector<Dart> new_of_old(n, -1), order;
  order.reserve(n);
  new_of_old[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Dart d = order[head];
    for (Dart nb : {m.sigma()(d), m.alpha()(d)}) {
      if (new_of_old[nb] < 0) {
        new_of_old[nb] = static_cast<Dart>(order.size());
        order.push_back(nb);
      }
    }
  }
  // connectivity is a constructor invariant, so the traversal covers all darts
  std::string bytes;
  bytes.reserve(3 + 2 * n * 2 + (dart_colors ? n + 1 : 0) + 2);
  append_hex2(bytes, n);
  bytes.push_back(':');
  for (int i = 0; i < n; ++i) append_hex2(bytes, new_of_old[m.sigma()(order[i])]);
  bytes.push_back('|');
  for (int i = 0; i < n; ++i) append_hex2(bytes, new_of_old[m.alpha()(order[i])]);
  if (dart_colors) {
    bytes.push_back('|');
    for (int i = 0; i < n; ++i)
      bytes.push_back((*dart_colors)[order[i]] == Color::white ? 'w' : 'b');
  }
  return {std::move(bytes), std::move(new_of_old)};
}

std::pair<CanonicalCode, Permutation> best_encoding(
    const OrientedMap& m, const std::vector<Color>* dart_colors) {
  std::optional<RootEncoding> best;
  int hits = 0;
  for (Dart root = 0; root < m.n_darts(); ++root) {
    RootEncoding e = encode_from_root(m, root, dart_colors);
    if (!best || e.bytes < best->bytes) {
      best = std::move(e);
      hits = 1;
    } else if (e.bytes == best->bytes) {
      ++hits;
    }
  }
  return {CanonicalCode{best->bytes, hits}, Permutation(best->new_of_old)};
}

std::vector<Color> dart_colors_of(const ColoredMap& m) {
  std::vector<Color> colors(m.n_darts());
  for (Dart d = 0; d < m.n_darts(); ++d) colors[d] = m.color_of_dart(d);
  return colors;
}

}  // namespace

CanonicalCode canonical_code(const OrientedMap& m) {
  return best_encoding(m, nullptr).first;
}

CanonicalCode canonical_code(const ColoredMap& m) {
  const auto colors = dart_colors_of(m);
  return best_encoding(m.base(), &colors).first;
}

OrientedMap canonical_form(const OrientedMap& m) {
  return relabel(m, best_encoding(m, nullptr).second);
}

ColoredMap canonical_form(const ColoredMap& m) {
  const auto colors = dart_colors_of(m);
  return relabel(m, best_encoding(m.base(), &colors).second);
}

}  // namespace mapcensus
