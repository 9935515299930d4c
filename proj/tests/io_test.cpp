#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "mapcensus/census.hpp"
#include "mapcensus/dot_export.hpp"
#include "mapcensus/error.hpp"
#include "mapcensus/golden.hpp"
#include "mapcensus/map_json.hpp"
#include "mapcensus/tables_io.hpp"
#include "test_support.hpp"

using namespace mapcensus;

TEST_CASE("map JSON round trip preserves structure and code") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const OrientedMap m = mapcensus::testing::random_map(rng, 2 + trial % 4);
    const OrientedMap back = map_from_json(map_to_json(m));
    CHECK(back == m);
  }

  for (const MapClass& cls : mapcensus::testing::shared_workspace().m446.catalog.classes) {
    const ColoredMap cm = cls.colored();
    const nlohmann::json j = map_to_json(cm);
    CHECK(json_has_colors(j));
    const ColoredMap back = colored_map_from_json(j);
    CHECK(back == cm);
    CHECK(canonical_code(back).bytes == cls.code.bytes);
  }
}

TEST_CASE("map JSON parse errors name the offending field") {
  CHECK_THROWS_WITH_AS(map_from_json(nlohmann::json{{"n_darts", 2}, {"alpha", {1, 0}}}),
                       doctest::Contains("sigma"), Error);
  CHECK_THROWS_WITH_AS(map_from_json(nlohmann::json{{"alpha", {1, 0}}}),
                       doctest::Contains("n_darts"), Error);
  nlohmann::json bad{{"n_darts", 2}, {"alpha", {0, 1}}, {"sigma", {0, 1}}};
  CHECK_THROWS_AS(map_from_json(bad), Error);  // alpha has fixed points
  nlohmann::json short_alpha{{"n_darts", 4}, {"alpha", {1, 0}}, {"sigma", {0, 1, 2, 3}}};
  CHECK_THROWS_AS(map_from_json(short_alpha), Error);
}

TEST_CASE("tables JSON round trips") {
  const GoldenBundle& g = golden_bundle();
  TableSet t;
  t.white = g.white_raw;
  t.black = g.black_raw;
  const TableSet back = tables_from_json(tables_to_json(t));
  CHECK(back.white == t.white);
  CHECK(back.black == t.black);

  CHECK_THROWS_WITH_AS(tables_from_json(nlohmann::json{{"white", {{"1", {"2", "3"}}}}}),
                       doctest::Contains("black"), Error);
  CHECK_THROWS_WITH_AS(tables_from_json(nlohmann::json{{"white", nlohmann::json::object()},
                                                       {"black", nlohmann::json::object()}}),
                       doctest::Contains("no rows"), Error);
}

TEST_CASE("table rendering quotes the reference rows verbatim") {
  const GoldenBundle& g = golden_bundle();
  const std::string md = render_table(g.white_raw, TableFormat::markdown);
  CHECK(md.find("| 19 | 16,8,7,8',16,8,7,8' |") != std::string::npos);
  CHECK(md.find("| 2 | 12',3',3',12',3',3' |") != std::string::npos);

  const std::string csv = render_table(g.white_raw, TableFormat::csv);
  CHECK(csv.find("19,\"16,8,7,8',16,8,7,8'\"") != std::string::npos);
  CHECK(csv.rfind("class,word\n", 0) == 0);

  // numeric-aware row order: "2" comes before "10"
  const std::string md4 = render_table(g.black_raw, TableFormat::markdown);
  CHECK(md4.find("| 2 |") < md4.find("| 10 |"));

  // rendering is a pure function of its input
  CHECK(render_table(g.white_raw, TableFormat::markdown) == md);
}

TEST_CASE("correspondence CSV: happy path and line-numbered errors") {
  const auto m = correspondence_from_csv("# comment\nW01,1\nW02,2\n\nB01,1'\n");
  CHECK(m.size() == 3);
  CHECK(m.at("W01") == "1");
  CHECK(m.at("B01") == "1'");

  CHECK_THROWS_WITH_AS(correspondence_from_csv("W01,1\nW01,2\n"), doctest::Contains("line 2"),
                       Error);
  CHECK_THROWS_WITH_AS(correspondence_from_csv("W01 1\n"), doctest::Contains("line 1"), Error);

  // repeated labels are legal: white "19" and black "19" are distinct classes
  const auto both = correspondence_from_csv("W05,19\nB07,19\n");
  CHECK(both.at("W05") == both.at("B07"));
}

TEST_CASE("relabel_rows rewrites keys and letters") {
  std::map<std::string, CyclicWord> rows;
  rows["W01"] = CyclicWord{{"B02", "B02", "B03"}};
  const auto out = relabel_rows(rows, {{"W01", "1"}}, {{"B02", "2'"}});
  REQUIRE(out.count("1") == 1);
  CHECK(out.at("1").letters == std::vector<std::string>{"2'", "2'", "B03"});

  CHECK_THROWS_AS(relabel_rows({{"A", CyclicWord{{"x"}}}, {"B", CyclicWord{{"x"}}}},
                               {{"A", "B"}}, {}),
                  Error);
}

TEST_CASE("golden bundle JSON round trip matches the embedded data") {
  const GoldenBundle& g = golden_bundle();
  const GoldenBundle back = golden_from_json(golden_to_json(g));
  CHECK(back.white_raw == g.white_raw);
  CHECK(back.black_raw == g.black_raw);
  CHECK(back.white_reduced == g.white_reduced);
  CHECK(back.black_reduced == g.black_reduced);
  CHECK(back.expect.m33_classes == 23);
  CHECK(back.expect.m446_classes == 40);
  CHECK(back.expect.fork_sites == 14);
  CHECK(back.expect.face_counts == std::vector<int>{7, 9});
  CHECK(back.expect.genus == std::vector<int>{17, 18});
}

#ifdef MAPCENSUS_GOLDEN_TABLES_PATH
TEST_CASE("the shipped golden data file equals the embedded bundle") {
  std::ifstream in(MAPCENSUS_GOLDEN_TABLES_PATH);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j == golden_to_json(golden_bundle()));
}
#endif

TEST_CASE("incidence DOT: 63 stable nodes, parallel edges at max multiplicity") {
  const GoldenBundle& g = golden_bundle();
  const IncidenceGraph graph = assemble_incidence(g.white_reduced, g.black_reduced);
  const std::string dot = incidence_dot(graph);

  std::size_t nodes = 0, pos = 0;
  while ((pos = dot.find("shape=circle", pos)) != std::string::npos) {
    ++nodes;
    pos += 1;
  }
  CHECK(nodes == 63);
  CHECK(dot.find("fillcolor=black") != std::string::npos);
  CHECK(incidence_dot(graph) == dot);  // byte-stable

  // a two-sided disagreement draws max(2, 1) = 2 strands
  std::map<std::string, CyclicWord> w, b;
  w["1"] = CyclicWord{{"a", "a"}};
  b["a"] = CyclicWord{{"1"}};
  const std::string small = incidence_dot(assemble_incidence(w, b));
  std::size_t strands = 0;
  pos = 0;
  while ((pos = small.find("\"w_1\" -- \"b_a\"", pos)) != std::string::npos) {
    ++strands;
    pos += 1;
  }
  CHECK(strands == 2);
}
