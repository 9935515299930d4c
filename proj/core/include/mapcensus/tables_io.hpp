#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "mapcensus/words.hpp"

namespace mapcensus {

// The two-sided word tables as exchanged on disk:
// {"white": {id: [letters...]}, "black": {id: [letters...]}}.
struct TableSet {
  std::map<std::string, CyclicWord> white;
  std::map<std::string, CyclicWord> black;
};

TableSet tables_from_json(const nlohmann::json& j);
nlohmann::json tables_to_json(const TableSet& t);
TableSet load_tables_file(const std::string& path);

enum class TableFormat { markdown, csv, json };
TableFormat table_format_from_string(const std::string& s);

// Relabeling parsed from CSV lines "computed_id,published_label" (blank
// lines and '#' comments allowed).  Ids must be duplicate-free; labels may
// repeat, since one file usually carries both sides of the correspondence and
// their display labels overlap.  Errors carry 1-based line numbers.
std::map<std::string, std::string> correspondence_from_csv(const std::string& text);

// Rekey rows and rewrite their letters (rows and letters live on opposite
// sides, hence two maps); ids without an entry pass through unchanged.
std::map<std::string, CyclicWord> relabel_rows(const std::map<std::string, CyclicWord>& rows,
                                               const std::map<std::string, std::string>& row_map,
                                               const std::map<std::string, std::string>& letter_map);

// One table rendered deterministically, rows in class_id_less order.
std::string render_table(const std::map<std::string, CyclicWord>& rows, TableFormat f);

}  // namespace mapcensus
