#include "mapcensus/compare.hpp"

#include <algorithm>
#include <sstream>

#include "mapcensus/census.hpp"
#include "mapcensus/error.hpp"

namespace mapcensus {

namespace {

// One comparison side flattened to node indices: whites first, then blacks,
// each in class_id_less order; words store the other side's node indices.
struct Side {
  std::vector<std::string> ids;
  int white_count = 0;
  std::vector<std::vector<int>> raw, reduced;
  bool partner_known = false;
  std::vector<bool> singleton;  // black nodes only, meaningful when partner_known

  bool is_black(int v) const { return v >= white_count; }
  int size() const { return static_cast<int>(ids.size()); }
};

std::vector<std::string> ordered_ids(const std::map<std::string, CyclicWord>& rows) {
  std::vector<std::string> ids;
  for (const auto& [id, w] : rows) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), class_id_less);
  return ids;
}

Side build_side(const CompareInput& in, bool reversed) {
  Side s;
  const auto wids = ordered_ids(in.white_raw);
  const auto bids = ordered_ids(in.black_raw);
  s.white_count = static_cast<int>(wids.size());
  std::map<std::string, int> windex, bindex;
  for (const auto& id : wids) {
    windex[id] = static_cast<int>(s.ids.size());
    s.ids.push_back(id);
  }
  for (const auto& id : bids) {
    bindex[id] = static_cast<int>(s.ids.size());
    s.ids.push_back(id);
  }

  auto resolve = [&](const std::map<std::string, CyclicWord>& table, bool rows_black,
                     std::vector<std::vector<int>>& out) {
    for (const auto& [id, w] : table) {
      const auto& row_index = rows_black ? bindex : windex;
      const auto& letter_index = rows_black ? windex : bindex;
      auto rit = row_index.find(id);
      if (rit == row_index.end())
        throw Error("comparison tables disagree on class ids: unexpected row " + id);
      std::vector<int> word;
      for (const auto& letter : w.letters) {
        auto it = letter_index.find(letter);
        if (it == letter_index.end())
          throw Error("word of class " + id + " names unknown class " + letter);
        word.push_back(it->second);
      }
      if (reversed) std::reverse(word.begin(), word.end());
      out[rit->second] = std::move(word);
    }
  };
  s.raw.resize(s.size());
  s.reduced.resize(s.size());
  resolve(in.white_raw, false, s.raw);
  resolve(in.black_raw, true, s.raw);
  resolve(in.white_reduced, false, s.reduced);
  resolve(in.black_reduced, true, s.reduced);
  for (int v = 0; v < s.size(); ++v)
    if (s.raw[v].empty() || s.reduced[v].empty())
      throw Error("class " + s.ids[v] + " missing a raw or reduced word");

  s.partner_known = !in.black_singletons.empty();
  s.singleton.assign(s.size(), false);
  for (const auto& id : in.black_singletons) {
    auto it = bindex.find(id);
    if (it == bindex.end()) throw Error("singleton list names unknown black class " + id);
    s.singleton[it->second] = true;
  }
  return s;
}

std::vector<int> multiplicity_profile(const std::vector<int>& word) {
  std::map<int, int> counts;
  for (int x : word) ++counts[x];
  std::vector<int> profile;
  for (const auto& [letter, c] : counts) profile.push_back(c);
  std::sort(profile.begin(), profile.end());
  return profile;
}

std::string initial_signature(const Side& s, int v, bool use_partner) {
  std::ostringstream sig;
  sig << (s.is_black(v) ? 'b' : 'w') << '/' << s.raw[v].size() << '/' << s.reduced[v].size() << '/';
  for (int c : multiplicity_profile(s.raw[v])) sig << c << '.';
  sig << '/';
  for (int c : multiplicity_profile(s.reduced[v])) sig << c << '.';
  if (use_partner && s.is_black(v)) sig << '/' << (s.singleton[v] ? 's' : 'p');
  return sig.str();
}

// One neighbour-signature round: new signature = own rank plus the sorted
// multiset of the raw word's letter ranks.  Ranks are pooled across both
// sides so equal structures get equal ranks.
int refine_round(const Side& a, const Side& b, std::vector<long>& ra, std::vector<long>& rb) {
  auto expanded = [](const Side& s, const std::vector<long>& r, int v) {
    std::vector<long> neigh;
    for (int u : s.raw[v]) neigh.push_back(r[u]);
    std::sort(neigh.begin(), neigh.end());
    std::ostringstream sig;
    sig << r[v] << ':';
    for (long x : neigh) sig << x << ',';
    return sig.str();
  };
  std::vector<std::string> sa(a.size()), sb(b.size());
  std::map<std::string, long> rank;
  for (int v = 0; v < a.size(); ++v) rank[sa[v] = expanded(a, ra, v)] = 0;
  for (int v = 0; v < b.size(); ++v) rank[sb[v] = expanded(b, rb, v)] = 0;
  long next = 0;
  for (auto& [sig, r] : rank) r = next++;
  for (int v = 0; v < a.size(); ++v) ra[v] = rank[sa[v]];
  for (int v = 0; v < b.size(); ++v) rb[v] = rank[sb[v]];
  return static_cast<int>(rank.size());
}

std::string cell_histogram(const std::vector<long>& ranks) {
  std::map<long, int> size_of;
  for (long r : ranks) ++size_of[r];
  std::map<int, int> histo;
  for (const auto& [r, n] : size_of) ++histo[n];
  std::ostringstream out;
  bool first = true;
  for (const auto& [sz, n] : histo) {
    if (!first) out << ", ";
    out << n << "x" << sz;
    first = false;
  }
  return out.str();
}

bool cyclic_equal_ints(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[(i + k) % n] == b[i];
    if (ok) return true;
  }
  return false;
}

struct Search {
  const Side& comp;
  const Side& fix;
  std::vector<int> map_cf;          // computed node -> fixture node, -1 unset
  std::vector<bool> used;           // fixture node taken
  std::vector<std::vector<int>> containing;  // node -> nodes whose raw word mentions it

  Search(const Side& c, const Side& f) : comp(c), fix(f) {
    map_cf.assign(comp.size(), -1);
    used.assign(fix.size(), false);
    containing.resize(comp.size());
    for (int v = 0; v < comp.size(); ++v)
      for (int u : comp.raw[v])
        if (containing[u].empty() || containing[u].back() != v) containing[u].push_back(v);
  }

  bool word_determined(int v) const {
    if (map_cf[v] < 0) return false;
    for (int u : comp.raw[v])
      if (map_cf[u] < 0) return false;
    return true;
  }

  // Hard constraints: black words equal up to rotation, white words equal as
  // multisets.  Called only for words that just became fully determined.
  bool word_consistent(int v) const {
    std::vector<int> mapped;
    for (int u : comp.raw[v]) mapped.push_back(map_cf[u]);
    const std::vector<int>& target = fix.raw[map_cf[v]];
    if (comp.is_black(v)) return cyclic_equal_ints(mapped, target);
    std::vector<int> a = mapped, b = target;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool consistent_after(int v) const {
    if (word_determined(v) && !word_consistent(v)) return false;
    for (int w : containing[v])
      if (w != v && word_determined(w) && !word_consistent(w)) return false;
    return true;
  }

  bool assign(const std::vector<int>& order, std::size_t at,
              const std::map<int, std::vector<int>>& fix_cells, const std::vector<long>& comp_rank) {
    if (at == order.size()) return true;
    const int v = order[at];
    for (int f : fix_cells.at(static_cast<int>(comp_rank[v]))) {
      if (used[f]) continue;
      map_cf[v] = f;
      used[f] = true;
      if (consistent_after(v) && assign(order, at + 1, fix_cells, comp_rank)) return true;
      used[f] = false;
      map_cf[v] = -1;
    }
    return false;
  }
};

std::string word_string(const Side& s, const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += s.ids[word[i]];
  }
  return out;
}

bool attempt(const CompareInput& computed, const CompareInput& fixture, bool reversed,
             CompareReport& report) {
  const Side comp = build_side(computed, false);
  const Side fix = build_side(fixture, reversed);
  auto& trace = report.refinement_trace;

  if (comp.white_count != fix.white_count ||
      comp.size() - comp.white_count != fix.size() - fix.white_count) {
    trace.push_back("class counts differ: computed " + std::to_string(comp.white_count) + "+" +
                    std::to_string(comp.size() - comp.white_count) + ", fixture " +
                    std::to_string(fix.white_count) + "+" +
                    std::to_string(fix.size() - fix.white_count));
    return false;
  }

  const bool use_partner = comp.partner_known && fix.partner_known;
  std::vector<long> rc(comp.size()), rf(fix.size());
  {
    std::map<std::string, long> rank;
    std::vector<std::string> sc(comp.size()), sf(fix.size());
    for (int v = 0; v < comp.size(); ++v) rank[sc[v] = initial_signature(comp, v, use_partner)] = 0;
    for (int v = 0; v < fix.size(); ++v) rank[sf[v] = initial_signature(fix, v, use_partner)] = 0;
    long next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (int v = 0; v < comp.size(); ++v) rc[v] = rank[sc[v]];
    for (int v = 0; v < fix.size(); ++v) rf[v] = rank[sf[v]];
    trace.push_back("initial: " + std::to_string(rank.size()) + " signatures; computed cells " +
                    cell_histogram(rc) + "; fixture cells " + cell_histogram(rf));
  }
  int distinct = 0;
  for (int round = 1; round <= 12; ++round) {
    const int now = refine_round(comp, fix, rc, rf);
    if (now == distinct) break;
    distinct = now;
    trace.push_back("round " + std::to_string(round) + ": " + std::to_string(now) +
                    " signatures; computed cells " + cell_histogram(rc));
  }

  std::map<int, std::vector<int>> comp_cells, fix_cells;
  for (int v = 0; v < comp.size(); ++v) comp_cells[static_cast<int>(rc[v])].push_back(v);
  for (int v = 0; v < fix.size(); ++v) fix_cells[static_cast<int>(rf[v])].push_back(v);
  bool cells_ok = true;
  for (const auto& [r, members] : comp_cells) {
    auto it = fix_cells.find(r);
    const std::size_t fn = it == fix_cells.end() ? 0 : it->second.size();
    if (members.size() != fn) {
      cells_ok = false;
      std::string who;
      for (int v : members) who += comp.ids[v] + " ";
      trace.push_back("signature cell imbalance: " + std::to_string(members.size()) +
                      " computed vs " + std::to_string(fn) + " fixture (computed members: " + who +
                      ")");
    }
  }
  for (const auto& [r, members] : fix_cells)
    if (!comp_cells.count(r)) {
      cells_ok = false;
      std::string who;
      for (int v : members) who += fix.ids[v] + " ";
      trace.push_back("signature cell only on fixture side (members: " + who + ")");
    }
  if (!cells_ok) return false;

  std::vector<int> order;
  {
    std::vector<std::pair<std::pair<std::size_t, int>, std::vector<int>>> cells;
    for (const auto& [r, members] : comp_cells) cells.push_back({{members.size(), r}, members});
    std::sort(cells.begin(), cells.end());
    for (const auto& [key, members] : cells)
      for (int v : members) order.push_back(v);
  }

  Search search(comp, fix);
  if (!search.assign(order, 0, fix_cells, rc)) {
    trace.push_back("no bijection satisfies the word constraints (black rotation, white multiset)");
    return false;
  }

  report.bijection_found = true;
  report.fixture_reading = reversed ? "reversed" : "as-written";
  for (int v = 0; v < comp.size(); ++v) {
    auto& m = comp.is_black(v) ? report.black_map : report.white_map;
    m[comp.ids[v]] = fix.ids[search.map_cf[v]];
  }

  for (int v = 0; v < comp.size(); ++v) {
    std::vector<int> mapped;
    for (int u : comp.raw[v]) mapped.push_back(search.map_cf[u]);
    const int fv = search.map_cf[v];
    CompareReport::RowDiff row;
    row.side = comp.is_black(v) ? "black" : "white";
    row.computed_id = comp.ids[v];
    row.fixture_label = fix.ids[fv];
    row.computed_word = word_string(fix, mapped);  // in fixture labels for direct diffing
    row.fixture_word = word_string(fix, fix.raw[fv]);
    const bool rot = cyclic_equal_ints(mapped, fix.raw[fv]);
    std::vector<int> a = mapped, b = fix.raw[fv];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const bool multi = a == b;
    row.kind = rot ? "rotation" : multi ? "multiset" : "mismatch";
    if (comp.is_black(v)) {
      if (rot) ++report.black_rotation_matches;
    } else {
      if (rot) ++report.white_rotation_matches;
      if (multi) ++report.white_multiset_matches;
    }
    report.rows.push_back(std::move(row));
  }
  return true;
}

}  // namespace

CompareInput compare_input_from_workspace(const Workspace& ws) {
  CompareInput in;
  in.white_raw = ws.white_raw;
  in.black_raw = ws.black_raw;
  in.white_reduced = ws.white_reduced;
  in.black_reduced = ws.black_reduced;
  in.black_singletons = ws.pairing.singletons;
  return in;
}

CompareInput compare_input_from_golden(const GoldenBundle& b) {
  CompareInput in;
  in.white_raw = b.white_raw;
  in.black_raw = b.black_raw;
  in.white_reduced = b.white_reduced;
  in.black_reduced = b.black_reduced;
  bool any_prime = false;
  for (const auto& [id, w] : b.black_raw)
    if (id.find('\'') != std::string::npos) any_prime = true;
  if (any_prime)
    for (const auto& [id, w] : b.black_raw)
      if (id.find('\'') == std::string::npos && !b.black_raw.count(id + "'"))
        in.black_singletons.push_back(id);
  return in;
}

CompareReport compare_tables(const CompareInput& computed, const CompareInput& fixture) {
  CompareReport report;
  if (attempt(computed, fixture, false, report)) return report;
  CompareReport reversed;
  reversed.refinement_trace = report.refinement_trace;
  reversed.refinement_trace.push_back("retrying with the reversed fixture reading");
  if (attempt(computed, fixture, true, reversed)) return reversed;
  reversed.bijection_found = false;
  return reversed;
}

CompareReport compare_to_golden(const Workspace& ws, const GoldenBundle& golden) {
  CompareReport r = compare_tables(compare_input_from_workspace(ws),
                                   compare_input_from_golden(golden));

  auto check = [&](const std::string& name, long expected, long actual) {
    r.expectations.push_back({name, expected, actual, expected == actual});
  };
  check("m33_classes", golden.expect.m33_classes, static_cast<long>(ws.m33.classes.size()));
  check("m446_classes", golden.expect.m446_classes,
        static_cast<long>(ws.m446.catalog.classes.size()));
  check("prime_pairs", 18, static_cast<long>(ws.pairing.pairs.size()));
  check("prime_singletons", 4, static_cast<long>(ws.pairing.singletons.size()));
  {
    const IncidenceGraph g = assemble_incidence(golden.white_reduced, golden.black_reduced);
    check("fixture_fork_sites", golden.expect.fork_sites,
          static_cast<long>(detect_forks(g).size()));
  }
  long len2 = 0, len3 = 0, white_letters = 0, black_len3 = 0;
  for (const auto& [id, w] : golden.black_reduced) {
    if (w.letters.size() == 2) ++len2;
    if (w.letters.size() == 3) ++len3;
  }
  for (const auto& [id, w] : golden.white_raw) white_letters += w.letters.size();
  for (const auto& [id, w] : golden.black_raw)
    if (w.letters.size() == 3) ++black_len3;
  check("fixture_black_reduced_len2_rows", 16, len2);
  check("fixture_black_reduced_len3_rows", 24, len3);
  check("fixture_white_raw_letter_total", 136, white_letters);
  check("fixture_black_raw_len3_rows", 40, black_len3);
  return r;
}

nlohmann::json compare_report_to_json(const CompareReport& r) {
  nlohmann::json j;
  j["bijection_found"] = r.bijection_found;
  j["fixture_reading"] = r.fixture_reading;
  j["white_map"] = nlohmann::json::object();
  for (const auto& [k, v] : r.white_map) j["white_map"][k] = v;
  j["black_map"] = nlohmann::json::object();
  for (const auto& [k, v] : r.black_map) j["black_map"][k] = v;

  j["black_rotation_matches"] = r.black_rotation_matches;
  j["white_multiset_matches"] = r.white_multiset_matches;
  j["white_rotation_matches"] = r.white_rotation_matches;

  j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json rj;
    rj["side"] = row.side;
    rj["computed_id"] = row.computed_id;
    rj["fixture_label"] = row.fixture_label;
    rj["kind"] = row.kind;
    rj["computed_word"] = row.computed_word;
    rj["fixture_word"] = row.fixture_word;
    j["rows"].push_back(rj);
  }

  j["diffs"] = nlohmann::json::array();
  for (const auto& row : r.rows)
    if (row.kind != "rotation") {
      nlohmann::json rj;
      rj["side"] = row.side;
      rj["computed_id"] = row.computed_id;
      rj["fixture_label"] = row.fixture_label;
      rj["kind"] = row.kind;
      rj["computed_word"] = row.computed_word;
      rj["fixture_word"] = row.fixture_word;
      j["diffs"].push_back(rj);
    }

  j["refinement_trace"] = r.refinement_trace;
  j["expectations"] = nlohmann::json::array();
  for (const auto& c : r.expectations) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    cj["pass"] = c.pass;
    j["expectations"].push_back(cj);
  }
  return j;
}

}  // namespace mapcensus
