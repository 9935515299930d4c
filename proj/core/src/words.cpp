#include "mapcensus/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "mapcensus/quad.hpp"

namespace mapcensus {

bool cyclic_equal(const CyclicWord& a, const CyclicWord& b) {
  const std::size_t n = a.letters.size();
  if (n != b.letters.size()) return false;
  if (n == 0) return true;
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a.letters[(i + k) % n] == b.letters[i];
    if (ok) return true;
  }
  return false;
}

bool class_id_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) -> std::pair<long, std::string> {
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 0) return {-1, s};
    return {std::stol(s.substr(0, i)), s.substr(i)};
  };
  auto [na, ta] = split(a);
  auto [nb, tb] = split(b);
  if (na != nb) return na < nb;
  return ta < tb;
}

std::vector<Run> cyclic_runs(const CyclicWord& w) {
  const int n = static_cast<int>(w.letters.size());
  if (n == 0) return {};
  const bool uniform = std::all_of(w.letters.begin(), w.letters.end(),
                                   [&](const std::string& x) { return x == w.letters[0]; });
  if (uniform) return {{w.letters[0], n}};
  int start = 0;  // first position opening a run
  while (w.letters[start] == w.letters[(start + n - 1) % n]) ++start;
  std::vector<Run> runs;
  for (int k = 0; k < n; ++k) {
    const std::string& x = w.letters[(start + k) % n];
    if (!runs.empty() && runs.back().letter == x)
      ++runs.back().length;
    else
      runs.push_back({x, 1});
  }
  return runs;
}

namespace {

CyclicWord primitive_period(const CyclicWord& w) {
  const int n = static_cast<int>(w.letters.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (int i = p; i < n && periodic; ++i)
      periodic = w.letters[i] == w.letters[i % p];
    if (periodic)
      return CyclicWord{{w.letters.begin(), w.letters.begin() + p}};
  }
  return w;
}

}  // namespace

CyclicWord reduce_white_word(const CyclicWord& w, WhiteReduceOptions opts) {
  CyclicWord out = w;
  if (opts.collapse_runs) {
    CyclicWord collapsed;
    for (const Run& r : cyclic_runs(out)) collapsed.letters.push_back(r.letter);
    out = std::move(collapsed);
  }
  if (opts.primitive_period && !out.letters.empty()) out = primitive_period(out);
  return out;
}

CyclicWord reduce_black_word(const CyclicWord& black_word, const std::string& black_id,
                             const std::map<std::string, CyclicWord>& white_raw,
                             BlackReduceOptions opts) {
  auto white_shows_double = [&](const std::string& white_id) {
    auto it = white_raw.find(white_id);
    if (it == white_raw.end())
      throw Error("reduce_black_word: unknown white letter " + white_id);
    for (const Run& r : cyclic_runs(it->second))
      if (r.letter == black_id &&
          (opts.require_exact_double_in_white ? r.length == 2 : r.length >= 2))
        return true;
    return false;
  };
  CyclicWord out;
  for (const Run& r : cyclic_runs(black_word)) {
    if (r.length == 2 && white_shows_double(r.letter)) {
      out.letters.push_back(r.letter);
    } else {
      for (int i = 0; i < r.length; ++i) out.letters.push_back(r.letter);
    }
  }
  return out;
}

DualDigraph loopless_dual(const ColoredMap& q) {
  const OrientedMap& base = q.base();
  const auto faces = base.faces();
  const auto face_of = orbit_index_of(faces, base.n_darts());
  DualDigraph d;
  for (const auto& f : faces) d.node_face_reps.push_back(f[0]);
  int loops = 0;
  for (Dart dart = 0; dart < base.n_darts(); ++dart) {
    const Dart opp = base.alpha()(dart);
    if (face_of[dart] == face_of[opp]) {
      if (dart < opp) ++loops;
      continue;
    }
    if (q.color_of_dart(dart) == Color::black)
      d.edges.push_back({face_of[dart], face_of[opp], dart, std::min(dart, opp)});
  }
  d.loops_removed = loops;
  // dart scan order already sorts edges by black_dart
  return d;
}

namespace {

std::vector<int> hierholzer(const DualDigraph& d, const std::vector<std::vector<int>>& out_edges,
                            int start_edge) {
  // out_edges: per node, edge indices in preference order
  std::vector<std::size_t> next_out(d.node_face_reps.size(), 0);
  std::vector<char> used(d.edges.size(), 0);
  std::vector<int> circuit;
  struct Frame {
    int node;
    int via_edge;  // -1 for the root frame
  };
  std::vector<Frame> stack{{d.edges[start_edge].from_node, -1}};
  while (!stack.empty()) {
    const int node = stack.back().node;
    int chosen = -1;
    auto& cursor = next_out[node];
    while (cursor < out_edges[node].size()) {
      const int e = out_edges[node][cursor];
      if (!used[e]) {
        chosen = e;
        break;
      }
      ++cursor;
    }
    if (chosen >= 0) {
      used[chosen] = 1;
      stack.push_back({d.edges[chosen].to_node, chosen});
    } else {
      if (stack.back().via_edge >= 0) circuit.push_back(stack.back().via_edge);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != d.edges.size()) {
    // count weak components over nodes incident to edges for the message
    std::vector<int> comp(d.node_face_reps.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < comp.size(); ++s) {
      bool incident = false;
      for (const auto& e : d.edges)
        if (e.from_node == static_cast<int>(s) || e.to_node == static_cast<int>(s))
          incident = true;
      if (!incident || comp[s] >= 0) continue;
      std::vector<int> q{static_cast<int>(s)};
      comp[s] = ncomp;
      for (std::size_t h = 0; h < q.size(); ++h)
        for (const auto& e : d.edges) {
          for (int nb : {e.from_node == q[h] ? e.to_node : -1,
                         e.to_node == q[h] ? e.from_node : -1})
            if (nb >= 0 && comp[nb] < 0) {
              comp[nb] = ncomp;
              q.push_back(nb);
            }
        }
      ++ncomp;
    }
    throw Error("eulerian_circuit: edge set spans " + std::to_string(ncomp) +
                " components; no single circuit exists");
  }
  // rotate so the start edge comes first
  auto it = std::find(circuit.begin(), circuit.end(), start_edge);
  std::rotate(circuit.begin(), it, circuit.end());
  return circuit;
}

std::vector<int> eulerian_circuit_impl(const DualDigraph& d, std::mt19937* rng) {
  if (d.edges.empty()) return {};
  std::vector<int> out_deg(d.node_face_reps.size(), 0), in_deg(d.node_face_reps.size(), 0);
  for (const auto& e : d.edges) {
    ++out_deg[e.from_node];
    ++in_deg[e.to_node];
  }
  for (std::size_t v = 0; v < out_deg.size(); ++v)
    if (out_deg[v] != in_deg[v])
      throw Error("eulerian_circuit: node " + std::to_string(v) + " has out-degree " +
                  std::to_string(out_deg[v]) + " != in-degree " + std::to_string(in_deg[v]));

  std::vector<std::vector<int>> out_edges(d.node_face_reps.size());
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
    out_edges[d.edges[e].from_node].push_back(e);
  for (auto& lst : out_edges) {
    std::sort(lst.begin(), lst.end(),
              [&](int a, int b) { return d.edges[a].black_dart < d.edges[b].black_dart; });
    if (rng) std::shuffle(lst.begin(), lst.end(), *rng);
  }
  int start_edge = 0;
  if (rng) {
    start_edge = static_cast<int>((*rng)() % d.edges.size());
  } else {
    for (int e = 1; e < static_cast<int>(d.edges.size()); ++e)
      if (d.edges[e].black_dart < d.edges[start_edge].black_dart) start_edge = e;
  }
  return hierholzer(d, out_edges, start_edge);
}

CyclicWord white_word_impl(const ColoredMap& q, const Catalog& m446, std::mt19937* rng) {
  if (m446.kind != CatalogKind::m446) throw Error("white_word: expected the m446 catalog");
  const DualDigraph d = loopless_dual(q);
  const std::vector<int> circuit = eulerian_circuit_impl(d, rng);
  CyclicWord w;
  for (int e : circuit) {
    const ColoredMap deleted = delete_separating_edge(q, d.edges[e].q_edge);
    const std::string code = canonical_code(deleted).bytes;
    const MapClass* cls = m446.find_code(code);
    if (!cls)
      throw Error("white_word: deletion of edge at dart " +
                  std::to_string(d.edges[e].q_edge) + " leaves the 40-class catalog");
    w.letters.push_back(cls->id);
  }
  return w;
}

}  // namespace

std::vector<int> eulerian_circuit(const DualDigraph& d) { return eulerian_circuit_impl(d, nullptr); }

std::vector<int> eulerian_circuit(const DualDigraph& d, std::mt19937& rng) {
  return eulerian_circuit_impl(d, &rng);
}

CyclicWord white_word(const ColoredMap& q, const Catalog& m446) {
  return white_word_impl(q, m446, nullptr);
}

CyclicWord white_word(const ColoredMap& q, const Catalog& m446, std::mt19937& rng) {
  return white_word_impl(q, m446, &rng);
}

CyclicWord black_word(const ColoredMap& m, const Catalog& m33) {
  if (m33.kind != CatalogKind::m33) throw Error("black_word: expected the m33 catalog");
  CyclicWord w;
  for (const ArcDescriptor& a : arcs(m)) {
    const ColoredMap filled = insert_arc(m, a);
    const OrientedMap restored = dequadrangulate(filled);
    const MapClass* cls = m33.find_code(canonical_code(restored).bytes);
    if (!cls)
      throw Error("black_word: arc insertion leaves the 23-class catalog");
    w.letters.push_back(cls->id);
  }
  return w;
}

}  // namespace mapcensus
