#pragma once

#include <array>
#include <cstdint>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "mapcensus/words.hpp"

namespace mapcensus {

// Bipartite incidence structure over the 23 white and 40 black classes, with
// per-vertex cyclic words (letters stored as vertex indices of the other
// side).  Works for raw or reduced words; two-sided multiplicity mismatches
// are recorded as diagnostics, set-level asymmetry is an error.
struct IncidenceGraph {
  struct Vertex {
    std::string id;
    bool black = false;
    std::vector<int> word;
  };
  struct Mismatch {
    int a, b;                  // unordered pair, a < b
    int count_in_a, count_in_b;
  };

  std::vector<Vertex> vertices;  // whites sorted by id, then blacks sorted by id
  int white_count = 0;
  std::vector<Mismatch> mismatches;

  int index_of(const std::string& id) const;  // -1 on miss
  int occurrences(int letter, int at) const;
};

IncidenceGraph assemble_incidence(const std::map<std::string, CyclicWord>& white_words,
                                  const std::map<std::string, CyclicWord>& black_words);

// A vertex whose word repeats an incoming label, making the face-tracing
// successor ambiguous.  options[i] is the letter following occurrence
// positions[i]; sites are sorted by (at, from).
struct ForkSite {
  int at = 0;
  int from = 0;
  std::array<int, 2> positions{};
  std::array<int, 2> options{};
};

std::vector<ForkSite> detect_forks(const IncidenceGraph& g);  // >= 3 occurrences → error

struct ChoiceVector {
  std::uint32_t bits = 0;
  int size = 0;
  bool bit(int i) const { return (bits >> i) & 1u; }
};

// Paper-mode tracing: successor function on ordered adjacent pairs,
// T(u,v) = (v, letter after the chosen occurrence of u in v's word); faces
// are the cycles of the functional graph, every state draining into exactly
// one cycle.  T need not be a bijection; the flag records whether it is.
struct TraceResult {
  int face_count = 0;
  bool bijective = false;
  std::vector<std::vector<int>> walks;  // each cycle as its vertex-index sequence
};

TraceResult trace_faces(const IncidenceGraph& g, const std::vector<ForkSite>& forks,
                        ChoiceVector c);

struct GenusEstimate {
  int defect2 = 0;       // 2 - V + E - F
  bool integral = true;  // defect even
  bool negative = false;
  double value = 0.0;    // defect2 / 2, exact when integral
};

GenusEstimate genus_estimate(int vertices, int edges, int faces);

enum class CensusMode { paper, ribbon };

struct CensusReport {
  CensusMode mode = CensusMode::paper;
  std::string source;  // "computed", "fixture", or a file path

  int fork_count = 0;               // paper mode: fork sites; ribbon mode: doubled bundles
  std::vector<ForkSite> forks;      // always the 2-occurrence sites
  long total_vectors = 0;
  std::map<int, long> face_histogram;
  long bijective_vectors = 0;       // paper mode; ribbon traces are always bijective
  long parity_violations = 0;       // single-bit flips between bijective vectors with odd Δfaces

  // edge-count conventions
  int white_letter_total = 0;
  int black_letter_total = 0;
  int max_pair_total = 0;

  std::vector<IncidenceGraph::Mismatch> mismatches;

  // ribbon mode: parallel bundles whose two sides disagree (enumeration is
  // skipped when present)
  std::vector<IncidenceGraph::Mismatch> obstructions;
};

// Exhaustively trace all 2^k resolutions.  jobs >= 1 workers over contiguous
// bit ranges; the report is identical for any worker count.
CensusReport run_census(const IncidenceGraph& g, CensusMode mode, int jobs);

nlohmann::json census_report_to_json(const CensusReport& r, const IncidenceGraph& g,
                                     bool include_timings = false, double elapsed_ms = 0.0);

}  // namespace mapcensus
