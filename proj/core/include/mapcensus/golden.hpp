#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "mapcensus/words.hpp"

namespace mapcensus {

// Reference cyclic-word tables under their published labels, plus the
// headline counts the pipeline is expected to reproduce.  Kept as data so
// comparisons and the census can run against a fixed target independent of
// the computed catalog's own labeling.
struct GoldenBundle {
  std::map<std::string, CyclicWord> white_raw;      // 23 classes
  std::map<std::string, CyclicWord> black_raw;      // 40 classes
  std::map<std::string, CyclicWord> white_reduced;  // collapsed runs, primitive period
  std::map<std::string, CyclicWord> black_reduced;

  // optional label correspondence: published label -> computed catalog id
  std::map<std::string, std::string> white_correspondence;
  std::map<std::string, std::string> black_correspondence;

  struct Expectations {
    int m33_classes = 23;
    int m446_classes = 40;
    int fork_sites = 14;
    std::vector<int> face_counts{7, 9};
    std::vector<int> genus{17, 18};
  };
  Expectations expect;
};

const GoldenBundle& golden_bundle();

GoldenBundle golden_from_json(const nlohmann::json& j);
nlohmann::json golden_to_json(const GoldenBundle& b);

}  // namespace mapcensus
