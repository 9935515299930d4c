#include "mapcensus/golden.hpp"

#include <sstream>

#include "mapcensus/error.hpp"

namespace mapcensus {

namespace {

CyclicWord parse_word(const std::string& csv) {
  CyclicWord w;
  std::istringstream in(csv);
  std::string letter;
  while (std::getline(in, letter, ',')) w.letters.push_back(letter);
  return w;
}

using Rows = std::vector<std::pair<const char*, const char*>>;

std::map<std::string, CyclicWord> table(const Rows& rows) {
  std::map<std::string, CyclicWord> out;
  for (const auto& [id, csv] : rows) out[id] = parse_word(csv);
  return out;
}

GoldenBundle build_bundle() {
  GoldenBundle b;

  b.white_raw = table({
      {"1", "17,1',17,4',4'"},
      {"2", "12',3',3',12',3',3'"},
      {"3", "12',13,2,6',6'"},
      {"4", "2,13,12',18,18"},
      {"5", "5,4,5',4'"},
      {"6", "5',5,5',5"},
      {"7", "15',8',8',15',19,13,3'"},
      {"8", "22',11,2,17,10',9"},
      {"9", "6',5,6,9',7,9"},
      {"10", "10',7,10,18',5',18"},
      {"11", "21,1',1',21,1,1"},
      {"12", "17',1,17',4,4"},
      {"13", "14',14',22,11',10',9,15'"},
      {"14", "11',22,9',10,17',2'"},
      {"15", "22,11',21,11,22',20"},
      {"16", "20,19,19,20,19',19'"},
      {"17", "6,6,12,13',2'"},
      {"18", "2',13',12,18',18'"},
      {"19", "16,8,7,8',16,8,7,8'"},
      {"20", "14,14,22',11,10,9',15"},
      {"21", "16,14',14',16,16,16,14,14"},
      {"22", "8,8,15,19',13',3,15"},
      {"23", "12,3,3,12,3,3"},
  });

  b.black_raw = table({
      {"1", "11,11,12"},   {"1'", "11,11,1"},   {"2", "8,4,3"},      {"2'", "14,18,17"},
      {"3", "22,23,23"},   {"3'", "2,2,7"},     {"4", "12,12,5"},    {"4'", "1,1,5"},
      {"5", "9,6,5"},      {"5'", "10,5,6"},    {"6", "17,17,9"},    {"6'", "3,3,9"},
      {"7", "19,9,10"},    {"8", "19,22,22"},   {"8'", "19,7,7"},    {"9", "13,8,9"},
      {"9'", "20,14,9"},   {"10", "20,10,14"},  {"10'", "13,10,8"},  {"11", "20,15,8"},
      {"11'", "13,15,14"}, {"12", "23,18,17"},  {"12'", "2,4,3"},    {"13", "7,3,4"},
      {"13'", "22,17,18"}, {"14", "21,20,20"},  {"14'", "21,13,13"}, {"15", "20,22,22"},
      {"15'", "13,7,7"},   {"16", "19,21,21"},  {"17", "8,1,1"},     {"17'", "14,12,12"},
      {"18", "10,4,4"},    {"18'", "10,18,18"}, {"19", "7,16,16"},   {"19'", "22,16,16"},
      {"20", "15,16,16"},  {"21", "15,11,11"},  {"22", "13,14,15"},  {"22'", "20,8,15"},
  });

  b.white_reduced = table({
      {"1", "17,1',17,4'"},
      {"2", "3',12'"},
      {"3", "12',13,2,6'"},
      {"4", "2,13,12',18"},
      {"5", "5,4,5',4'"},
      {"6", "5',5"},
      {"7", "15',8',15',19,13,3'"},
      {"8", "22',11,2,17,10',9"},
      {"9", "6',5,6,9',7,9"},
      {"10", "10',7,10,18',5',18"},
      {"11", "21,1',21,1"},
      {"12", "17',1,17',4"},
      {"13", "14',22,11',10',9,15'"},
      {"14", "11',22,9',10,17',2'"},
      {"15", "22,11',21,11,22',20"},
      {"16", "20,19,20,19'"},
      {"17", "6,12,13',2'"},
      {"18", "2',13',12,18'"},
      {"19", "16,8,7,8'"},
      {"20", "14,22',11,10,9',15"},
      {"21", "16,14',16,14"},
      {"22", "8,15,19',13',3,15"},
      {"23", "3,12"},
  });

  b.black_reduced = table({
      {"1", "11,12"},      {"1'", "11,1"},      {"2", "8,4,3"},      {"2'", "14,18,17"},
      {"3", "22,23"},      {"3'", "2,7"},       {"4", "12,5"},       {"4'", "1,5"},
      {"5", "9,6,5"},      {"5'", "10,5,6"},    {"6", "17,9"},       {"6'", "3,9"},
      {"7", "19,9,10"},    {"8", "19,22"},      {"8'", "19,7"},      {"9", "13,8,9"},
      {"9'", "20,14,9"},   {"10", "20,10,14"},  {"10'", "13,10,8"},  {"11", "20,15,8"},
      {"11'", "13,15,14"}, {"12", "23,18,17"},  {"12'", "2,4,3"},    {"13", "7,3,4"},
      {"13'", "22,17,18"}, {"14", "21,20"},     {"14'", "21,13"},    {"15", "20,22,22"},
      {"15'", "13,7,7"},   {"16", "19,21,21"},  {"17", "8,1,1"},     {"17'", "14,12,12"},
      {"18", "10,4"},      {"18'", "10,18"},    {"19", "7,16"},      {"19'", "22,16"},
      {"20", "15,16,16"},  {"21", "15,11,11"},  {"22", "13,14,15"},  {"22'", "20,8,15"},
  });

  return b;
}

std::map<std::string, CyclicWord> words_from_json(const nlohmann::json& j,
                                                  const std::string& field) {
  if (!j.contains(field) || !j.at(field).is_object())
    throw Error("golden bundle: missing object field \"" + field + "\"");
  std::map<std::string, CyclicWord> out;
  for (const auto& [id, arr] : j.at(field).items()) {
    if (!arr.is_array() || arr.empty())
      throw Error("golden bundle: " + field + "[" + id + "] must be a non-empty array");
    CyclicWord w;
    for (const auto& letter : arr) {
      if (!letter.is_string())
        throw Error("golden bundle: " + field + "[" + id + "] has a non-string letter");
      w.letters.push_back(letter.get<std::string>());
    }
    out[id] = std::move(w);
  }
  return out;
}

nlohmann::json words_to_json(const std::map<std::string, CyclicWord>& words) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [id, w] : words) j[id] = w.letters;
  return j;
}

}  // namespace

const GoldenBundle& golden_bundle() {
  static const GoldenBundle b = build_bundle();
  return b;
}

GoldenBundle golden_from_json(const nlohmann::json& j) {
  GoldenBundle b;
  b.white_raw = words_from_json(j, "white_raw");
  b.black_raw = words_from_json(j, "black_raw");
  b.white_reduced = words_from_json(j, "white_reduced");
  b.black_reduced = words_from_json(j, "black_reduced");
  if (j.contains("white_correspondence"))
    for (const auto& [k, v] : j.at("white_correspondence").items())
      b.white_correspondence[k] = v.get<std::string>();
  if (j.contains("black_correspondence"))
    for (const auto& [k, v] : j.at("black_correspondence").items())
      b.black_correspondence[k] = v.get<std::string>();
  if (j.contains("expectations")) {
    const auto& e = j.at("expectations");
    if (e.contains("m33_classes")) b.expect.m33_classes = e.at("m33_classes").get<int>();
    if (e.contains("m446_classes")) b.expect.m446_classes = e.at("m446_classes").get<int>();
    if (e.contains("fork_sites")) b.expect.fork_sites = e.at("fork_sites").get<int>();
    if (e.contains("face_counts"))
      b.expect.face_counts = e.at("face_counts").get<std::vector<int>>();
    if (e.contains("genus")) b.expect.genus = e.at("genus").get<std::vector<int>>();
  }
  return b;
}

nlohmann::json golden_to_json(const GoldenBundle& b) {
  nlohmann::json j;
  j["white_raw"] = words_to_json(b.white_raw);
  j["black_raw"] = words_to_json(b.black_raw);
  j["white_reduced"] = words_to_json(b.white_reduced);
  j["black_reduced"] = words_to_json(b.black_reduced);
  if (!b.white_correspondence.empty()) {
    j["white_correspondence"] = nlohmann::json::object();
    for (const auto& [k, v] : b.white_correspondence) j["white_correspondence"][k] = v;
  }
  if (!b.black_correspondence.empty()) {
    j["black_correspondence"] = nlohmann::json::object();
    for (const auto& [k, v] : b.black_correspondence) j["black_correspondence"][k] = v;
  }
  j["expectations"] = {{"m33_classes", b.expect.m33_classes},
                       {"m446_classes", b.expect.m446_classes},
                       {"fork_sites", b.expect.fork_sites},
                       {"face_counts", b.expect.face_counts},
                       {"genus", b.expect.genus}};
  return j;
}

}  // namespace mapcensus
