#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "mapcensus/golden.hpp"
#include "mapcensus/words.hpp"
#include "mapcensus/workspace.hpp"

namespace mapcensus {

// One side of a table comparison: the four word tables plus whatever partner
// structure is known.  black_singletons lists classes with no conjugate
// partner; leave it empty when unknown and the invariant is skipped.
struct CompareInput {
  std::map<std::string, CyclicWord> white_raw, black_raw, white_reduced, black_reduced;
  std::vector<std::string> black_singletons;
};

CompareInput compare_input_from_workspace(const Workspace& ws);
// Fixture side: singletons are the labels without a primed twin, derived only
// when prime marks occur in the label set at all.
CompareInput compare_input_from_golden(const GoldenBundle& b);

struct CompareReport {
  bool bijection_found = false;
  // "as-written" or "reversed": cyclic words flip under a global orientation
  // change, so the search accepts either reading of the reference tables and
  // records which one matched.
  std::string fixture_reading = "as-written";

  std::map<std::string, std::string> white_map;  // computed id -> fixture label
  std::map<std::string, std::string> black_map;

  struct RowDiff {
    std::string side;  // "white" | "black"
    std::string computed_id, fixture_label;
    std::string kind;  // "rotation" | "multiset" | "mismatch"
    std::string computed_word, fixture_word;
  };
  std::vector<RowDiff> rows;          // every row, matched or not
  int black_rotation_matches = 0;     // target: all 40
  int white_multiset_matches = 0;     // target: all 23
  int white_rotation_matches = 0;     // informational

  std::vector<std::string> refinement_trace;

  struct Check {
    std::string name;
    long expected, actual;
    bool pass;
  };
  std::vector<Check> expectations;
};

// Invariant refinement (degrees, word shapes, reduced shapes, partner
// existence, then neighbor-signature rounds) followed by a backtracking
// search for a label bijection under which every black word matches up to
// rotation and every white word matches as a letter multiset.  White cyclic
// order is deliberately unconstrained; order differences are itemized.
CompareReport compare_tables(const CompareInput& computed, const CompareInput& fixture);

// Convenience: workspace vs reference bundle, with the expectation checks
// (class counts, fork sites, reduced shape profile) filled in.
CompareReport compare_to_golden(const Workspace& ws, const GoldenBundle& golden);

nlohmann::json compare_report_to_json(const CompareReport& r);

}  // namespace mapcensus
