#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "mapcensus/catalog.hpp"
#include "mapcensus/oriented_map.hpp"

namespace mapcensus {

// A cyclic sequence of class labels; rotations are equal, reflections are not.
struct CyclicWord {
  std::vector<std::string> letters;
  bool operator==(const CyclicWord&) const = default;
};

bool cyclic_equal(const CyclicWord& a, const CyclicWord& b);

// Display order for class labels: "2" < "10" < "10'" < "11"; labels without
// a leading number compare as plain strings.
bool class_id_less(const std::string& a, const std::string& b);

// Maximal runs of equal letters read cyclically (first and last letters of
// the storage order may share a run).
struct Run {
  std::string letter;
  int length;
};
std::vector<Run> cyclic_runs(const CyclicWord& w);

struct WhiteReduceOptions {
  bool collapse_runs = true;     // each maximal cyclic run becomes one letter
  bool primitive_period = true;  // then keep one primitive period
};
CyclicWord reduce_white_word(const CyclicWord& w, WhiteReduceOptions opts = {});

struct BlackReduceOptions {
  // Collapse an adjacent pair u,u in black b's word only when white u's raw
  // word contains b in a maximal cyclic run of length exactly 2.  The
  // "exactly" matters: a white run of three keeps the black pair uncollapsed.
  // Setting this false relaxes to "any run of length >= 2" for rule
  // experiments.
  bool require_exact_double_in_white = true;
};
CyclicWord reduce_black_word(const CyclicWord& black_word, const std::string& black_id,
                             const std::map<std::string, CyclicWord>& white_raw,
                             BlackReduceOptions opts = {});

// Dual digraph of a quadrangulation with loops removed: one node per face,
// one directed edge per separating edge, oriented by the dart at the black
// endpoint (black vertex on the directed edge's right).  Face circuits
// alternate colors, so in-degree equals out-degree at every node.
struct DualDigraph {
  struct Edge {
    int from_node;
    int to_node;
    Dart black_dart;  // identifies the directed edge; also the tie-break key
    Dart q_edge;      // lesser dart of the crossed edge
  };
  std::vector<Dart> node_face_reps;  // least dart of each face orbit
  std::vector<Edge> edges;           // sorted by black_dart
  int loops_removed = 0;
};

DualDigraph loopless_dual(const ColoredMap& q);

// Canonical Eulerian circuit as a sequence of edge indices: Hierholzer with
// least-black-dart preference, started and rotated to the globally least
// edge.  Empty edge set gives an empty circuit; unbalanced or disconnected
// edge sets throw.
std::vector<int> eulerian_circuit(const DualDigraph& d);
// Exploration variant: tie-breaks and starting edge drawn from rng.
std::vector<int> eulerian_circuit(const DualDigraph& d, std::mt19937& rng);

// The cyclic deletion word of a quadrangulation: walk the circuit and record
// the M(4,4,6) class of Q minus each crossed edge.  Throws if a deletion
// leaves the catalog (closure violation).
CyclicWord white_word(const ColoredMap& q, const Catalog& m446);
CyclicWord white_word(const ColoredMap& q, const Catalog& m446, std::mt19937& rng);

// The cyclic insertion word of an M(4,4,6) map: for each hexagon diagonal in
// circuit order, the m33 class whose quadrangulation the insertion restores.
CyclicWord black_word(const ColoredMap& m, const Catalog& m33);

}  // namespace mapcensus
