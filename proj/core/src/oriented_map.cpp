#include "mapcensus/oriented_map.hpp"

#include <algorithm>
#include <utility>

namespace mapcensus {

namespace {

bool generates_connected(const Permutation& alpha, const Permutation& sigma) {
  const int n = alpha.size();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart nb : {sigma(d), alpha(d)}) {
      if (!seen[nb]) {
        seen[nb] = 1;
        ++visited;
        stack.push_back(nb);
      }
    }
  }
  return visited == n;
}

}  // namespace

OrientedMap::OrientedMap(Permutation alpha, Permutation sigma)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
  if (alpha_.size() != sigma_.size())
    throw Error("OrientedMap: alpha and sigma act on different dart sets");
  if (alpha_.size() < 2 || alpha_.size() % 2 != 0)
    throw Error("OrientedMap: dart count must be positive and even, got " +
                std::to_string(alpha_.size()));
  if (!alpha_.is_involution() || !alpha_.is_fixed_point_free())
    throw Error("OrientedMap: alpha must be a fixed-point-free involution");
  if (!generates_connected(alpha_, sigma_))
    throw Error("OrientedMap: <sigma, alpha> does not act transitively (map is disconnected)");
}

Counts OrientedMap::counts() const {
  return Counts{sigma_.orbit_count(), n_darts() / 2, phi().orbit_count()};
}

std::vector<int> OrientedMap::face_degrees() const {
  std::vector<int> degs;
  for (const auto& f : faces()) degs.push_back(static_cast<int>(f.size()));
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::vector<int> orbit_index_of(const std::vector<std::vector<Dart>>& orbits, int n_darts) {
  std::vector<int> index(n_darts, -1);
  for (int i = 0; i < static_cast<int>(orbits.size()); ++i)
    for (Dart d : orbits[i]) index[d] = i;
  return index;
}

int euler_genus(const OrientedMap& m) {
  const Counts c = m.counts();
  const int defect = 2 - (c.vertices - c.edges + c.faces);
  if (defect % 2 != 0)
    throw Error("euler_genus: odd Euler defect " + std::to_string(defect) +
                " — corrupted map state");
  return defect / 2;
}

OrientedMap dual_map(const OrientedMap& m) {
  return OrientedMap(m.alpha(), m.phi());
}

OrientedMap mirror(const OrientedMap& m) {
  return OrientedMap(m.alpha(), m.sigma().inverse());
}

OrientedMap relabel(const OrientedMap& m, const Permutation& r) {
  if (r.size() != m.n_darts()) throw Error("relabel: size mismatch");
  const Permutation ri = r.inverse();
  return OrientedMap(compose(r, compose(m.alpha(), ri)),
                     compose(r, compose(m.sigma(), ri)));
}

ColoredMap::ColoredMap(OrientedMap base, std::vector<Color> vertex_colors)
    : base_(std::move(base)), vertex_colors_(std::move(vertex_colors)) {
  const auto verts = base_.vertices();
  if (vertex_colors_.size() != verts.size())
    throw Error("ColoredMap: expected one color per vertex, got " +
                std::to_string(vertex_colors_.size()) + " for " +
                std::to_string(verts.size()) + " vertices");
  dart_colors_.resize(base_.n_darts());
  for (int v = 0; v < static_cast<int>(verts.size()); ++v)
    for (Dart d : verts[v]) dart_colors_[d] = vertex_colors_[v];
}

ColoredMap bicolor(const OrientedMap& m, Color root_color) {
  const auto verts = m.vertices();
  const auto vertex_of = orbit_index_of(verts, m.n_darts());
  const int nv = static_cast<int>(verts.size());
  std::vector<int> col(nv, -1);  // -1 unvisited, else 0/1
  std::vector<int> queue{vertex_of[0]};
  col[vertex_of[0]] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (Dart d : verts[v]) {
      const int u = vertex_of[m.alpha()(d)];
      if (col[u] < 0) {
        col[u] = 1 - col[v];
        queue.push_back(u);
      } else if (col[u] == col[v]) {
        throw Error("bicolor: not bipartite (edge inside one color class)");
      }
    }
  }
  std::vector<Color> colors(nv);
  for (int v = 0; v < nv; ++v)
    colors[v] = (col[v] == 0) ? root_color : other(root_color);
  return ColoredMap(m, std::move(colors));
}

ColoredMap color_swap(const ColoredMap& m) {
  std::vector<Color> colors = m.vertex_colors();
  for (Color& c : colors) c = other(c);
  return ColoredMap(m.base(), std::move(colors));
}

ColoredMap mirror(const ColoredMap& m) {
  // sigma^-1 has the same orbit sets as sigma, so vertex indexing is unchanged
  return ColoredMap(mirror(m.base()), m.vertex_colors());
}

ColoredMap relabel(const ColoredMap& m, const Permutation& r) {
  OrientedMap base = relabel(m.base(), r);
  const auto new_verts = base.vertices();
  const Permutation ri = r.inverse();
  std::vector<Color> colors(new_verts.size());
  for (int v = 0; v < static_cast<int>(new_verts.size()); ++v)
    colors[v] = m.color_of_dart(ri(new_verts[v][0]));
  return ColoredMap(std::move(base), std::move(colors));
}

}  // namespace mapcensus
