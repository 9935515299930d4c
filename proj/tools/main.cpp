// mapcensus: build the plane-map catalogs, derive the two-sided cyclic-word
// tables, trace the ambiguity census, and compare everything against the
// reference tables.  Subcommands: catalog, tables, census, compare, export.
#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mapcensus/catalog.hpp"
#include "mapcensus/census.hpp"
#include "mapcensus/compare.hpp"
#include "mapcensus/dot_export.hpp"
#include "mapcensus/error.hpp"
#include "mapcensus/golden.hpp"
#include "mapcensus/map_json.hpp"
#include "mapcensus/tables_io.hpp"
#include "mapcensus/workspace.hpp"

namespace {

using namespace mapcensus;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::uint32_t> seed_option(bool set, std::uint32_t value) {
  if (set) return value;
  return std::nullopt;
}

TableSet tier_tables(const Workspace& ws, int which) {
  TableSet t;
  if (which <= 2) {
    t.white = ws.white_raw;
    t.black = ws.black_raw;
  } else {
    t.white = ws.white_reduced;
    t.black = ws.black_reduced;
  }
  return t;
}

TableSet golden_tier(int which) {
  const GoldenBundle& b = golden_bundle();
  TableSet t;
  if (which <= 2) {
    t.white = b.white_raw;
    t.black = b.black_raw;
  } else {
    t.white = b.white_reduced;
    t.black = b.black_reduced;
  }
  return t;
}

// --source computed | golden | <tables.json path>
TableSet resolve_source(const std::string& source, std::optional<std::uint32_t> seed,
                        std::string& label) {
  if (source == "computed") {
    label = "computed";
    return tier_tables(build_workspace(seed), 3);
  }
  if (source == "golden") {
    label = "golden";
    return golden_tier(3);
  }
  label = source;
  return load_tables_file(source);
}

int cmd_catalog(const std::string& kind, const std::string& out, bool strict) {
  Workspace ws = build_workspace();
  const Catalog& cat = kind == "m33" ? ws.m33 : ws.m446.catalog;
  std::cout << kind << ": " << cat.classes.size() << " classes\n";
  if (!out.empty()) write_output(catalog_to_json(cat).dump(2) + "\n", out);
  const std::size_t expected = kind == "m33" ? 23 : 40;
  if (strict && cat.classes.size() != expected) {
    std::cerr << "strict: expected " << expected << " classes\n";
    return 1;
  }
  return 0;
}

int cmd_tables(int which, const std::string& format, const std::string& paper_map,
               const std::string& out, std::optional<std::uint32_t> seed) {
  Workspace ws = build_workspace(seed);
  TableSet tier = tier_tables(ws, which);

  std::map<std::string, std::string> corr;
  if (!paper_map.empty()) corr = correspondence_from_csv(read_file(paper_map));
  if (!corr.empty()) {
    tier.white = relabel_rows(tier.white, corr, corr);
    tier.black = relabel_rows(tier.black, corr, corr);
  }

  const TableFormat f = table_format_from_string(format);
  if (f == TableFormat::json) {
    // the JSON form carries the whole tier so it round-trips into --source
    write_output(tables_to_json(tier).dump(2) + "\n", out);
    return 0;
  }
  const auto& rows = (which == 1 || which == 3) ? tier.white : tier.black;
  write_output(render_table(rows, f), out);
  return 0;
}

int cmd_census(const std::string& mode_name, const std::string& source, int jobs,
               const std::string& out, bool timings, std::optional<std::uint32_t> seed,
               bool strict) {
  const CensusMode mode = mode_name == "ribbon" ? CensusMode::ribbon : CensusMode::paper;
  std::string label;
  const TableSet tables = resolve_source(source, seed, label);
  const IncidenceGraph g = assemble_incidence(tables.white, tables.black);

  const auto t0 = std::chrono::steady_clock::now();
  CensusReport report = run_census(g, mode, jobs);
  const auto t1 = std::chrono::steady_clock::now();
  report.source = label;
  const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  const std::string text = census_report_to_json(report, g, timings, ms).dump(2) + "\n";
  write_output(text, out);
  if (!out.empty()) {
    std::ostringstream line;
    line << "census (" << mode_name << ", " << label << "): " << report.total_vectors
         << " vectors, faces {";
    bool first = true;
    for (const auto& [f, c] : report.face_histogram) {
      if (!first) line << ", ";
      line << f << ": " << c;
      first = false;
    }
    line << "}\n";
    std::cout << line.str();
  }

  if (strict) {
    std::vector<int> faces;
    for (const auto& [f, c] : report.face_histogram) faces.push_back(f);
    if (faces != golden_bundle().expect.face_counts) {
      std::cerr << "strict: face-count set differs from the expected {7, 9}\n";
      return 1;
    }
  }
  return 0;
}

int cmd_compare(const std::string& golden_path, bool self, const std::string& out,
                std::optional<std::uint32_t> seed, bool strict) {
  Workspace ws = build_workspace(seed);
  CompareReport report;
  if (self) {
    const CompareInput in = compare_input_from_workspace(ws);
    report = compare_tables(in, in);
  } else if (!golden_path.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(golden_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error("golden bundle " + golden_path + ": " + e.what());
    }
    report = compare_to_golden(ws, golden_from_json(j));
  } else {
    report = compare_to_golden(ws, golden_bundle());
  }

  std::cout << "bijection: " << (report.bijection_found ? "found" : "NOT FOUND")
            << " (fixture read " << report.fixture_reading << ")\n";
  int whites = 0, blacks = 0, diffs = 0;
  for (const auto& row : report.rows) {
    (row.side == "white" ? whites : blacks)++;
    if (row.kind != "rotation") ++diffs;
  }
  std::cout << "black rotation matches: " << report.black_rotation_matches << "/" << blacks << "\n";
  std::cout << "white multiset matches: " << report.white_multiset_matches << "/" << whites << "\n";
  std::cout << "itemized diffs: " << diffs << "\n";
  for (const auto& c : report.expectations)
    std::cout << "expect " << c.name << ": expected " << c.expected << ", actual " << c.actual
              << (c.pass ? "" : "  FAIL") << "\n";
  if (!out.empty()) write_output(compare_report_to_json(report).dump(2) + "\n", out);

  if (strict) {
    bool ok = report.bijection_found && report.black_rotation_matches == blacks &&
              report.white_multiset_matches == whites;
    for (const auto& c : report.expectations) ok = ok && c.pass;
    if (!ok) return 1;
  }
  return 0;
}

int cmd_export(const std::string& what, std::string format, const std::string& source,
               const std::string& tier, const std::string& id, const std::string& out,
               std::optional<std::uint32_t> seed) {
  if (what == "incidence") {
    if (format.empty()) format = "dot";
    TableSet tables;
    std::string label;
    if (source == "computed") {
      Workspace ws = build_workspace(seed);
      tables = tier_tables(ws, tier == "raw" ? 1 : 3);
    } else if (source == "golden") {
      tables = golden_tier(tier == "raw" ? 1 : 3);
    } else {
      tables = load_tables_file(source);
    }
    const IncidenceGraph g = assemble_incidence(tables.white, tables.black);
    if (format == "dot") {
      write_output(incidence_dot(g), out);
    } else if (format == "json") {
      write_output(tables_to_json(tables).dump(2) + "\n", out);
    } else {
      throw Error("export incidence supports formats dot and json");
    }
    return 0;
  }
  if (what == "map") {
    if (format.empty()) format = "json";
    if (format != "json") throw Error("export map supports format json");
    if (id.empty()) throw Error("export map needs --id (a W.. or B.. class id)");
    Workspace ws = build_workspace();
    if (!id.empty() && id[0] == 'B') {
      const MapClass& cls = ws.m446.catalog.by_id(id);
      write_output(map_to_json(cls.colored()).dump(2) + "\n", out);
    } else {
      const MapClass& cls = ws.m33.by_id(id);
      write_output(map_to_json(cls.map).dump(2) + "\n", out);
    }
    return 0;
  }
  throw Error("export expects \"incidence\" or \"map\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane-map catalog, cyclic-word tables, and ambiguity census workbench"};
  app.require_subcommand(1);

  // catalog
  std::string cat_kind, cat_out;
  bool cat_strict = false;
  auto* catalog = app.add_subcommand("catalog", "Build a catalog and print its class count");
  catalog->add_option("kind", cat_kind, "m33 or m446")
      ->required()
      ->check(CLI::IsMember({"m33", "m446"}));
  catalog->add_option("--out", cat_out, "Write the catalog JSON here");
  catalog->add_flag("--strict", cat_strict, "Exit nonzero when the class count is unexpected");

  // tables
  int tab_which = 1;
  std::string tab_format = "md", tab_map, tab_out;
  bool tab_seed_set = false;
  std::uint32_t tab_seed = 0;
  auto* tables = app.add_subcommand("tables", "Emit a cyclic-word table");
  tables->add_option("--which", tab_which, "1 white raw, 2 black raw, 3 white reduced, 4 black reduced")
      ->check(CLI::Range(1, 4));
  tables->add_option("--format", tab_format, "md, csv, or json (json carries the whole tier)");
  tables->add_option("--paper-map", tab_map, "CSV id,label relabeling applied to rows and letters");
  tables->add_option("--out", tab_out, "Write here instead of stdout");
  tables->add_option("--circuit-seed", tab_seed, "Randomize Eulerian tie-breaks with this seed")
      ->each([&](const std::string&) { tab_seed_set = true; });

  // census
  std::string cen_mode = "paper", cen_source = "computed", cen_out;
  int cen_jobs = 1;
  bool cen_timings = false, cen_strict = false, cen_seed_set = false;
  std::uint32_t cen_seed = 0;
  auto* census = app.add_subcommand("census", "Trace all fork resolutions of the incidence words");
  census->add_option("--mode", cen_mode, "paper (successor map) or ribbon (dart gluings)")
      ->check(CLI::IsMember({"paper", "ribbon"}));
  census->add_option("--source", cen_source, "computed, golden, or a tables JSON path");
  census->add_option("--jobs", cen_jobs, "Worker count (never changes report bytes)")
      ->check(CLI::PositiveNumber);
  census->add_option("--out", cen_out, "Write the report JSON here");
  census->add_flag("--timings", cen_timings, "Include elapsed time in the report");
  census->add_flag("--strict", cen_strict, "Exit nonzero when the face-count set is unexpected");
  census->add_option("--circuit-seed", cen_seed, "Randomize Eulerian tie-breaks (computed source)")
      ->each([&](const std::string&) { cen_seed_set = true; });

  // compare
  std::string cmp_golden, cmp_out;
  bool cmp_self = false, cmp_strict = false, cmp_seed_set = false;
  std::uint32_t cmp_seed = 0;
  auto* compare = app.add_subcommand("compare", "Diff the computed tables against the reference");
  compare->add_option("--golden", cmp_golden, "Reference bundle JSON (default: embedded)");
  compare->add_flag("--self", cmp_self, "Compare computed tables against themselves");
  compare->add_option("--out", cmp_out, "Write the full report JSON here");
  compare->add_flag("--strict", cmp_strict, "Exit nonzero on expectation or match failures");
  compare->add_option("--circuit-seed", cmp_seed, "Randomize Eulerian tie-breaks")
      ->each([&](const std::string&) { cmp_seed_set = true; });

  // export
  std::string exp_what, exp_format, exp_source = "computed", exp_tier = "reduced", exp_id, exp_out;
  bool exp_seed_set = false;
  std::uint32_t exp_seed = 0;
  auto* exporter = app.add_subcommand("export", "Write DOT or JSON artifacts");
  exporter->add_option("what", exp_what, "incidence or map")->required();
  exporter->add_option("--format", exp_format, "dot or json");
  exporter->add_option("--source", exp_source, "computed, golden, or a tables JSON path");
  exporter->add_option("--tier", exp_tier, "raw or reduced words")
      ->check(CLI::IsMember({"raw", "reduced"}));
  exporter->add_option("--id", exp_id, "Class id for map export (W.. or B..)");
  exporter->add_option("--out", exp_out, "Write here instead of stdout");
  exporter->add_option("--circuit-seed", exp_seed, "Randomize Eulerian tie-breaks")
      ->each([&](const std::string&) { exp_seed_set = true; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog->parsed()) return cmd_catalog(cat_kind, cat_out, cat_strict);
    if (tables->parsed())
      return cmd_tables(tab_which, tab_format, tab_map, tab_out,
                        seed_option(tab_seed_set, tab_seed));
    if (census->parsed())
      return cmd_census(cen_mode, cen_source, cen_jobs, cen_out, cen_timings,
                        seed_option(cen_seed_set, cen_seed), cen_strict);
    if (compare->parsed())
      return cmd_compare(cmp_golden, cmp_self, cmp_out, seed_option(cmp_seed_set, cmp_seed),
                         cmp_strict);
    if (exporter->parsed())
      return cmd_export(exp_what, exp_format, exp_source, exp_tier, exp_id, exp_out,
                        seed_option(exp_seed_set, exp_seed));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
