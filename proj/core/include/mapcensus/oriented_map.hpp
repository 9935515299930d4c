#pragma once

#include <vector>

#include "mapcensus/permutation.hpp"

namespace mapcensus {

struct Counts {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  bool operator==(const Counts&) const = default;
};

enum class Color : unsigned char { white, black };

inline Color other(Color c) { return c == Color::white ? Color::black : Color::white; }

// A connected oriented combinatorial map: alpha is the fixed-point-free edge
// involution, sigma the counter-clockwise rotation at each vertex.  The face
// permutation is phi = sigma∘alpha, so the face orbit of a dart is the face
// on its right when traversed away from its vertex.  Immutable once built.
class OrientedMap {
public:
  OrientedMap(Permutation alpha, Permutation sigma);

  int n_darts() const { return alpha_.size(); }
  const Permutation& alpha() const { return alpha_; }
  const Permutation& sigma() const { return sigma_; }
  Permutation phi() const { return compose(sigma_, alpha_); }

  std::vector<std::vector<Dart>> vertices() const { return sigma_.orbits(); }
  std::vector<std::vector<Dart>> faces() const { return phi().orbits(); }
  Counts counts() const;

  // face degrees, ascending
  std::vector<int> face_degrees() const;

  bool operator==(const OrientedMap&) const = default;

private:
  Permutation alpha_;
  Permutation sigma_;
};

// index_of[d] = position of d's orbit in the least-dart-sorted orbit list
std::vector<int> orbit_index_of(const std::vector<std::vector<Dart>>& orbits, int n_darts);

// Euler genus via V - E + F = 2 - 2g.  The defect is always even for a
// connected map; an odd defect means corrupted state and throws.
int euler_genus(const OrientedMap& m);

// Dual map: (alpha*, sigma*) = (alpha, phi).  phi∘alpha = sigma makes this an
// exact involution: dual(dual(m)) == m dart-for-dart.
OrientedMap dual_map(const OrientedMap& m);

// Mirror image: reverse all rotations.
OrientedMap mirror(const OrientedMap& m);

// Conjugate both permutations by r: dart d becomes r(d).
OrientedMap relabel(const OrientedMap& m, const Permutation& r);

// A map together with a proper 2-coloring of its vertices.  vertex_colors is
// indexed like OrientedMap::vertices() (orbits sorted by least dart); the
// coloring is carried through relabel/mirror and checked for size only — use
// bicolor() to derive one that is guaranteed proper.
class ColoredMap {
public:
  ColoredMap(OrientedMap base, std::vector<Color> vertex_colors);

  const OrientedMap& base() const { return base_; }
  const std::vector<Color>& vertex_colors() const { return vertex_colors_; }
  Color color_of_dart(Dart d) const { return dart_colors_[d]; }
  int n_darts() const { return base_.n_darts(); }

  bool operator==(const ColoredMap&) const = default;

private:
  OrientedMap base_;
  std::vector<Color> vertex_colors_;
  std::vector<Color> dart_colors_;  // derived, per dart
};

// Proper 2-coloring by BFS over vertices; the vertex containing dart 0 gets
// root_color.  Throws "not bipartite" on an odd cycle.
ColoredMap bicolor(const OrientedMap& m, Color root_color);

ColoredMap color_swap(const ColoredMap& m);
ColoredMap mirror(const ColoredMap& m);
ColoredMap relabel(const ColoredMap& m, const Permutation& r);

}  // namespace mapcensus
