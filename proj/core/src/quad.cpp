#include "mapcensus/quad.hpp"

#include <algorithm>
#include <utility>

namespace mapcensus {

ColoredMap quadrangulate(const OrientedMap& m) {
  const int n = m.n_darts();
  const Permutation phi_inv = m.phi().inverse();
  std::vector<Dart> sig(2 * n), alf(2 * n);
  for (Dart d = 0; d < n; ++d) {
    sig[d] = m.sigma()(d);
    sig[n + d] = n + phi_inv(d);
    alf[d] = n + d;
    alf[n + d] = d;
  }
  OrientedMap base(Permutation(std::move(alf)), Permutation(std::move(sig)));
  const auto verts = base.vertices();
  std::vector<Color> colors(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v)
    colors[v] = verts[v][0] < n ? Color::white : Color::black;
  return ColoredMap(std::move(base), std::move(colors));
}

namespace {

void require_properly_colored(const ColoredMap& q, const char* op) {
  for (Dart d = 0; d < q.n_darts(); ++d)
    if (q.color_of_dart(d) == q.color_of_dart(q.base().alpha()(d)))
      throw Error(std::string(op) + ": coloring is not proper (monochrome edge)");
}

}  // namespace

OrientedMap dequadrangulate(const ColoredMap& q) {
  require_properly_colored(q, "dequadrangulate");
  std::vector<Dart> whites;
  for (Dart d = 0; d < q.n_darts(); ++d)
    if (q.color_of_dart(d) == Color::white) whites.push_back(d);

  // the white partner across each quadrilateral face
  std::vector<Dart> partner(q.n_darts(), -1);
  for (const auto& face : q.base().faces()) {
    if (face.size() != 4)
      throw Error("dequadrangulate: face of degree " + std::to_string(face.size()) +
                  ", need all quadrilaterals");
    std::vector<Dart> w;
    for (Dart d : face)
      if (q.color_of_dart(d) == Color::white) w.push_back(d);
    // proper coloring + degree 4 forces exactly two white corners
    partner[w[0]] = w[1];
    partner[w[1]] = w[0];
  }

  std::vector<Dart> newid(q.n_darts(), -1);
  for (std::size_t i = 0; i < whites.size(); ++i) newid[whites[i]] = static_cast<Dart>(i);
  std::vector<Dart> sig(whites.size()), alf(whites.size());
  for (Dart d : whites) {
    sig[newid[d]] = newid[q.base().sigma()(d)];
    alf[newid[d]] = newid[partner[d]];
  }
  return OrientedMap(Permutation(std::move(alf)), Permutation(std::move(sig)));
}

std::vector<Dart> separating_edges(const OrientedMap& m) {
  const auto face_of = orbit_index_of(m.faces(), m.n_darts());
  std::vector<Dart> out;
  for (Dart d = 0; d < m.n_darts(); ++d)
    if (d < m.alpha()(d) && face_of[d] != face_of[m.alpha()(d)]) out.push_back(d);
  return out;
}

ColoredMap delete_separating_edge(const ColoredMap& q, Dart e) {
  const OrientedMap& base = q.base();
  if (e < 0 || e >= q.n_darts()) throw Error("delete_separating_edge: dart out of range");
  const Dart d0 = std::min(e, base.alpha()(e));
  const Dart d1 = base.alpha()(d0);
  const auto face_of = orbit_index_of(base.faces(), q.n_darts());
  if (face_of[d0] == face_of[d1])
    throw Error("delete_separating_edge: edge of dart " + std::to_string(e) +
                " is not separating");

  std::vector<Dart> newid(q.n_darts(), -1);
  int next = 0;
  for (Dart d = 0; d < q.n_darts(); ++d)
    if (d != d0 && d != d1) newid[d] = next++;

  std::vector<Dart> sig(next), alf(next);
  for (Dart d = 0; d < q.n_darts(); ++d) {
    if (newid[d] < 0) continue;
    Dart s = base.sigma()(d);
    while (s == d0 || s == d1) s = base.sigma()(s);
    sig[newid[d]] = newid[s];
    alf[newid[d]] = newid[base.alpha()(d)];
  }
  OrientedMap out(Permutation(std::move(alf)), Permutation(std::move(sig)));
  const auto verts = out.vertices();
  std::vector<Color> colors(verts.size());
  std::vector<Dart> old_of_new(next);
  for (Dart d = 0; d < q.n_darts(); ++d)
    if (newid[d] >= 0) old_of_new[newid[d]] = d;
  for (std::size_t v = 0; v < verts.size(); ++v)
    colors[v] = q.color_of_dart(old_of_new[verts[v][0]]);
  return ColoredMap(std::move(out), std::move(colors));
}

namespace {

std::vector<Dart> hexagon_from_least(const ColoredMap& m) {
  for (const auto& face : m.base().faces())
    if (face.size() == 6) return face;  // orbits() starts each face at its least dart
  throw Error("arcs: no hexagonal face");
}

}  // namespace

std::vector<ArcDescriptor> arcs(const ColoredMap& m) {
  if (m.base().face_degrees() != std::vector<int>{4, 4, 6})
    throw Error("arcs: face degrees must be {4,4,6}");
  const auto hex = hexagon_from_least(m);
  std::vector<ArcDescriptor> out;
  for (int i = 0; i < 6; ++i)
    if (m.color_of_dart(hex[i]) == Color::black)
      out.push_back({hex[i], hex[(i + 3) % 6]});
  if (out.size() != 3)
    throw Error("arcs: hexagon corners do not alternate colors");
  return out;
}

ColoredMap insert_arc(const ColoredMap& m, const ArcDescriptor& arc) {
  const OrientedMap& base = m.base();
  const int n = m.n_darts();
  if (arc.black_corner < 0 || arc.black_corner >= n || arc.white_corner < 0 ||
      arc.white_corner >= n)
    throw Error("insert_arc: corner dart out of range");
  if (m.color_of_dart(arc.black_corner) != Color::black ||
      m.color_of_dart(arc.white_corner) != Color::white)
    throw Error("insert_arc: corner colors are swapped or equal");
  Permutation phi = base.phi();
  if (phi(phi(phi(arc.black_corner))) != arc.white_corner)
    throw Error("insert_arc: corners are not three face steps apart");

  const Permutation sigma_inv = base.sigma().inverse();
  const Dart x = n, y = n + 1;
  std::vector<Dart> sig(n + 2), alf(n + 2);
  for (Dart d = 0; d < n; ++d) {
    sig[d] = base.sigma()(d);
    alf[d] = base.alpha()(d);
  }
  sig[sigma_inv(arc.black_corner)] = x;
  sig[x] = arc.black_corner;
  sig[sigma_inv(arc.white_corner)] = y;
  sig[y] = arc.white_corner;
  alf[x] = y;
  alf[y] = x;
  OrientedMap out(Permutation(std::move(alf)), Permutation(std::move(sig)));
  const auto verts = out.vertices();
  std::vector<Color> colors(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v) {
    Dart rep = verts[v][0];
    if (rep == x) rep = arc.black_corner;
    if (rep == y) rep = arc.white_corner;
    colors[v] = m.color_of_dart(rep);
  }
  return ColoredMap(std::move(out), std::move(colors));
}

}  // namespace mapcensus
