#pragma once

#include <vector>

#include "mapcensus/oriented_map.hpp"

namespace mapcensus {

// Radial construction: one white dart w_d = d and one black dart b_d = n + d
// per dart d of m, alpha_Q(w_d) = b_d, sigma_Q(w_d) = w_{sigma(d)},
// sigma_Q(b_d) = b_{phi^-1(d)}.  White vertices are m's vertices, black
// vertices m's faces; every face of Q is a quadrilateral because
// sigma∘phi^-1 = sigma∘alpha∘sigma^-1 is an involution.
ColoredMap quadrangulate(const OrientedMap& m);

// Inverse of quadrangulate up to isomorphism: keep the white darts with their
// rotation; alpha joins the two white darts sharing a quadrilateral face.
// Requires a properly 2-colored map with all faces of degree 4.
OrientedMap dequadrangulate(const ColoredMap& q);

// Edges whose two darts lie in distinct face orbits, as ascending lesser darts.
std::vector<Dart> separating_edges(const OrientedMap& m);

// Remove the edge of dart e (given by either dart), merging its two faces.
// Remaining darts are compressed order-preservingly.  Throws if the edge is
// not separating.
ColoredMap delete_separating_edge(const ColoredMap& q, Dart e);

// A diagonal of the unique hexagonal face, from a black corner to the white
// corner three steps along the face circuit.
struct ArcDescriptor {
  Dart black_corner;
  Dart white_corner;
  bool operator==(const ArcDescriptor&) const = default;
};

// The three candidate diagonals, in face-circuit order starting from the
// hexagon's least dart.  Requires face degrees {4,4,6}.
std::vector<ArcDescriptor> arcs(const ColoredMap& m);

// Split the hexagon into two quadrilaterals along the arc.  The fresh darts
// are x = n at the black corner and y = n + 1 at the white corner, spliced
// immediately before each corner dart in its rotation.
ColoredMap insert_arc(const ColoredMap& m, const ArcDescriptor& arc);

}  // namespace mapcensus
