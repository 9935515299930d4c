#include "mapcensus/tables_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mapcensus/error.hpp"

namespace mapcensus {

namespace {

std::map<std::string, CyclicWord> side_from_json(const nlohmann::json& j,
                                                 const std::string& side) {
  if (!j.contains(side) || !j.at(side).is_object())
    throw Error("tables: missing object field \"" + side + "\"");
  std::map<std::string, CyclicWord> out;
  for (const auto& [id, arr] : j.at(side).items()) {
    if (!arr.is_array() || arr.empty())
      throw Error("tables: " + side + "[" + id + "] must be a non-empty array of letters");
    CyclicWord w;
    for (const auto& letter : arr) {
      if (!letter.is_string())
        throw Error("tables: " + side + "[" + id + "] has a non-string letter");
      w.letters.push_back(letter.get<std::string>());
    }
    out[id] = std::move(w);
  }
  if (out.empty()) throw Error("tables: \"" + side + "\" has no rows");
  return out;
}

std::vector<std::string> display_order(const std::map<std::string, CyclicWord>& rows) {
  std::vector<std::string> ids;
  for (const auto& [id, w] : rows) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), class_id_less);
  return ids;
}

std::string join_letters(const CyclicWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ',';
    s += w.letters[i];
  }
  return s;
}

}  // namespace

TableSet tables_from_json(const nlohmann::json& j) {
  TableSet t;
  t.white = side_from_json(j, "white");
  t.black = side_from_json(j, "black");
  return t;
}

nlohmann::json tables_to_json(const TableSet& t) {
  nlohmann::json j;
  j["white"] = nlohmann::json::object();
  j["black"] = nlohmann::json::object();
  for (const auto& [id, w] : t.white) j["white"][id] = w.letters;
  for (const auto& [id, w] : t.black) j["black"][id] = w.letters;
  return j;
}

TableSet load_tables_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tables file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("tables file " + path + ": " + e.what());
  }
  try {
    return tables_from_json(j);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

TableFormat table_format_from_string(const std::string& s) {
  if (s == "md" || s == "markdown") return TableFormat::markdown;
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  throw Error("unknown table format \"" + s + "\" (expected md, csv, or json)");
}

std::map<std::string, std::string> correspondence_from_csv(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto comma = trimmed.find(',');
    if (comma == std::string::npos)
      throw Error("correspondence line " + std::to_string(lineno) + ": expected \"id,label\", got \"" +
                  line + "\"");
    std::string id = trimmed.substr(0, comma);
    std::string label = trimmed.substr(comma + 1);
    auto strip = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      const auto e = s.find_last_not_of(" \t");
      s.erase(e == std::string::npos ? 0 : e + 1);
    };
    strip(id);
    strip(label);
    if (id.empty() || label.empty())
      throw Error("correspondence line " + std::to_string(lineno) + ": empty id or label");
    if (out.count(id))
      throw Error("correspondence line " + std::to_string(lineno) + ": duplicate id \"" + id + "\"");
    // labels may repeat: one file usually carries both sides, whose display
    // labels overlap.  relabel_rows rejects collisions within a table.
    out[id] = label;
  }
  return out;
}

std::map<std::string, CyclicWord> relabel_rows(const std::map<std::string, CyclicWord>& rows,
                                               const std::map<std::string, std::string>& row_map,
                                               const std::map<std::string, std::string>& letter_map) {
  auto mapped = [](const std::map<std::string, std::string>& m, const std::string& k) {
    auto it = m.find(k);
    return it == m.end() ? k : it->second;
  };
  std::map<std::string, CyclicWord> out;
  for (const auto& [id, w] : rows) {
    CyclicWord nw;
    for (const auto& letter : w.letters) nw.letters.push_back(mapped(letter_map, letter));
    const std::string key = mapped(row_map, id);
    if (out.count(key)) throw Error("relabeling collapses two rows onto \"" + key + "\"");
    out[key] = std::move(nw);
  }
  return out;
}

std::string render_table(const std::map<std::string, CyclicWord>& rows, TableFormat f) {
  std::string out;
  switch (f) {
    case TableFormat::markdown:
      out = "| class | cyclic word |\n| --- | --- |\n";
      for (const auto& id : display_order(rows))
        out += "| " + id + " | " + join_letters(rows.at(id)) + " |\n";
      return out;
    case TableFormat::csv:
      out = "class,word\n";
      for (const auto& id : display_order(rows))
        out += id + ",\"" + join_letters(rows.at(id)) + "\"\n";
      return out;
    case TableFormat::json: {
      nlohmann::json j = nlohmann::json::object();
      for (const auto& [id, w] : rows) j[id] = w.letters;
      return j.dump(2) + "\n";
    }
  }
  throw Error("unreachable table format");
}

}  // namespace mapcensus
