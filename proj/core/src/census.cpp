#include "mapcensus/census.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <thread>
#include <utility>

#include "mapcensus/error.hpp"

namespace mapcensus {

namespace {

std::vector<std::string> sorted_ids(const std::map<std::string, CyclicWord>& words) {
  std::vector<std::string> ids;
  ids.reserve(words.size());
  for (const auto& [id, w] : words) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), class_id_less);
  return ids;
}

}  // namespace

int IncidenceGraph::index_of(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    if (vertices[i].id == id) return i;
  return -1;
}

int IncidenceGraph::occurrences(int letter, int at) const {
  int c = 0;
  for (int x : vertices[at].word)
    if (x == letter) ++c;
  return c;
}

IncidenceGraph assemble_incidence(const std::map<std::string, CyclicWord>& white_words,
                                  const std::map<std::string, CyclicWord>& black_words) {
  IncidenceGraph g;
  const auto white_ids = sorted_ids(white_words);
  const auto black_ids = sorted_ids(black_words);
  g.white_count = static_cast<int>(white_ids.size());

  std::map<std::string, int> windex, bindex;
  for (const auto& id : white_ids) {
    windex[id] = static_cast<int>(g.vertices.size());
    g.vertices.push_back({id, false, {}});
  }
  for (const auto& id : black_ids) {
    bindex[id] = static_cast<int>(g.vertices.size());
    g.vertices.push_back({id, true, {}});
  }

  for (const auto& id : white_ids) {
    auto& v = g.vertices[windex[id]];
    for (const auto& letter : white_words.at(id).letters) {
      auto it = bindex.find(letter);
      if (it == bindex.end())
        throw Error("white word " + id + " names unknown black class " + letter);
      v.word.push_back(it->second);
    }
    if (v.word.empty()) throw Error("white word " + id + " is empty");
  }
  for (const auto& id : black_ids) {
    auto& v = g.vertices[bindex[id]];
    for (const auto& letter : black_words.at(id).letters) {
      auto it = windex.find(letter);
      if (it == windex.end())
        throw Error("black word " + id + " names unknown white class " + letter);
      v.word.push_back(it->second);
    }
    if (v.word.empty()) throw Error("black word " + id + " is empty");
  }

  // set-level symmetry is an integrity requirement; multiplicity differences
  // are recorded, not fatal
  for (int w = 0; w < g.white_count; ++w) {
    for (int b : g.vertices[w].word) {
      const int cw = g.occurrences(b, w);
      const int cb = g.occurrences(w, b);
      if (cb == 0)
        throw Error("incidence asymmetry: black " + g.vertices[b].id + " missing from white " +
                    g.vertices[w].id + "'s side");
      if (cw != cb) {
        bool seen = false;
        for (const auto& m : g.mismatches)
          if (m.a == w && m.b == b) seen = true;
        if (!seen) g.mismatches.push_back({w, b, cw, cb});
      }
    }
  }
  for (int b = g.white_count; b < static_cast<int>(g.vertices.size()); ++b)
    for (int w : g.vertices[b].word)
      if (g.occurrences(b, w) == 0)
        throw Error("incidence asymmetry: white " + g.vertices[w].id + " missing from black " +
                    g.vertices[b].id + "'s side");
  return g;
}

std::vector<ForkSite> detect_forks(const IncidenceGraph& g) {
  std::vector<ForkSite> forks;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const auto& word = g.vertices[v].word;
    const int len = static_cast<int>(word.size());
    std::vector<int> distinct(word);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int u : distinct) {
      std::vector<int> pos;
      for (int i = 0; i < len; ++i)
        if (word[i] == u) pos.push_back(i);
      if (pos.size() >= 3)
        throw Error("unsupported fork: " + std::string(g.vertices[v].black ? "black " : "white ") +
                    g.vertices[v].id + " hears " + g.vertices[u].id + " " +
                    std::to_string(pos.size()) + " times");
      if (pos.size() == 2) {
        ForkSite f;
        f.at = v;
        f.from = u;
        f.positions = {pos[0], pos[1]};
        f.options = {word[(pos[0] + 1) % len], word[(pos[1] + 1) % len]};
        forks.push_back(f);
      }
    }
  }
  return forks;  // iteration order is already (at, from) ascending
}

namespace {

// Ordered adjacent pair (u, at): u occurs in at's word.  t0/t1 are the
// successor state indices for the two occurrence choices (equal when u occurs
// once); fork is the index into the fork list, or -1.
struct State {
  int u, at;
  int t0 = -1, t1 = -1;
  int fork = -1;
};

struct StateSpace {
  std::vector<State> states;
  std::map<std::pair<int, int>, int> index;  // (u, at) -> state
};

StateSpace build_states(const IncidenceGraph& g, const std::vector<ForkSite>& forks) {
  StateSpace sp;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    std::vector<int> distinct(g.vertices[v].word);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int u : distinct) {
      sp.index[{u, v}] = static_cast<int>(sp.states.size());
      sp.states.push_back({u, v});
    }
  }
  std::map<std::pair<int, int>, int> fork_of;
  for (int i = 0; i < static_cast<int>(forks.size()); ++i)
    fork_of[{forks[i].from, forks[i].at}] = i;

  for (auto& s : sp.states) {
    const auto& word = g.vertices[s.at].word;
    const int len = static_cast<int>(word.size());
    std::vector<int> succ;
    for (int i = 0; i < len; ++i)
      if (word[i] == s.u) succ.push_back(word[(i + 1) % len]);
    auto target = [&](int w) {
      auto it = sp.index.find({s.at, w});
      if (it == sp.index.end())
        throw Error("successor state missing for pair (" + g.vertices[s.at].id + ", " +
                    g.vertices[w].id + ")");
      return it->second;
    };
    s.t0 = target(succ[0]);
    s.t1 = succ.size() > 1 ? target(succ[1]) : s.t0;
    auto it = fork_of.find({s.u, s.at});
    s.fork = it == fork_of.end() ? -1 : it->second;
  }
  return sp;
}

// Faces of one functional graph: number of distinct cycles every state
// drains into.  Stamp arrays are caller-owned so the hot loop never
// reallocates; walk ids increase monotonically across masks, which makes the
// in_walk test self-invalidating.
struct TraceBuffers {
  std::vector<long> seen, in_walk, indeg_seen;
  long walk_id = 0;
  explicit TraceBuffers(int n) : seen(n, -1), in_walk(n, -1), indeg_seen(n, -1) {}
};

std::pair<int, bool> count_faces(const std::vector<int>& T, long mask_stamp, TraceBuffers& buf) {
  const int n = static_cast<int>(T.size());
  int faces = 0;
  for (int s = 0; s < n; ++s) {
    if (buf.seen[s] == mask_stamp) continue;
    const long walk = ++buf.walk_id;
    int x = s;
    while (buf.seen[x] != mask_stamp) {
      buf.seen[x] = mask_stamp;
      buf.in_walk[x] = walk;
      x = T[x];
    }
    if (buf.in_walk[x] == walk) ++faces;
  }
  bool bijective = true;
  for (int s = 0; s < n; ++s) {
    if (buf.indeg_seen[T[s]] == mask_stamp) bijective = false;
    buf.indeg_seen[T[s]] = mask_stamp;
  }
  return {faces, bijective};
}

void apply_choice(const StateSpace& sp, const std::vector<ForkSite>& forks,
                  const std::vector<int>& fork_states, std::uint32_t mask, std::vector<int>& T) {
  for (int i = 0; i < static_cast<int>(forks.size()); ++i) {
    const State& s = sp.states[fork_states[i]];
    T[fork_states[i]] = ((mask >> i) & 1u) ? s.t1 : s.t0;
  }
}

void edge_conventions(const IncidenceGraph& g, CensusReport& r) {
  r.white_letter_total = 0;
  r.black_letter_total = 0;
  r.max_pair_total = 0;
  for (int w = 0; w < g.white_count; ++w) {
    r.white_letter_total += static_cast<int>(g.vertices[w].word.size());
    std::vector<int> distinct(g.vertices[w].word);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int b : distinct)
      r.max_pair_total += std::max(g.occurrences(b, w), g.occurrences(w, b));
  }
  for (int b = g.white_count; b < static_cast<int>(g.vertices.size()); ++b)
    r.black_letter_total += static_cast<int>(g.vertices[b].word.size());
}

long count_parity_violations(int k, const std::vector<std::uint8_t>& faces,
                             const std::vector<std::uint8_t>& bij) {
  long violations = 0;
  const long total = 1L << k;
  for (long m = 0; m < total; ++m) {
    if (!bij[m]) continue;
    for (int b = 0; b < k; ++b) {
      if ((m >> b) & 1) continue;
      const long m2 = m | (1L << b);
      if (bij[m2] && ((faces[m] ^ faces[m2]) & 1)) ++violations;
    }
  }
  return violations;
}

void run_over_masks(long total, int jobs, const std::function<void(long, long, int)>& body) {
  jobs = std::max(1, jobs);
  if (jobs > total) jobs = static_cast<int>(total);
  if (jobs == 1) {
    body(0, total, 0);
    return;
  }
  std::vector<std::thread> workers;
  const long chunk = (total + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    const long lo = j * chunk;
    const long hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&body, lo, hi, j] { body(lo, hi, j); });
  }
  for (auto& t : workers) t.join();
}

CensusReport run_paper(const IncidenceGraph& g, int jobs) {
  CensusReport r;
  r.mode = CensusMode::paper;
  r.mismatches = g.mismatches;
  edge_conventions(g, r);

  r.forks = detect_forks(g);
  r.fork_count = static_cast<int>(r.forks.size());
  const int k = r.fork_count;
  if (k > 24) throw Error("census needs 2^" + std::to_string(k) + " traces; refusing past 2^24");

  const StateSpace sp = build_states(g, r.forks);
  std::vector<int> fork_states;
  for (const auto& f : r.forks) fork_states.push_back(sp.index.at({f.from, f.at}));
  std::vector<int> T0(sp.states.size());
  for (int s = 0; s < static_cast<int>(sp.states.size()); ++s) T0[s] = sp.states[s].t0;

  const long total = 1L << k;
  r.total_vectors = total;
  std::vector<std::uint8_t> faces(total), bij(total);

  run_over_masks(total, jobs, [&](long lo, long hi, int worker) {
    TraceBuffers buf(static_cast<int>(sp.states.size()));
    std::vector<int> T = T0;
    long stamp = static_cast<long>(worker) << 40;  // distinct per worker, fresh per mask
    for (long m = lo; m < hi; ++m) {
      apply_choice(sp, r.forks, fork_states, static_cast<std::uint32_t>(m), T);
      auto [f, b] = count_faces(T, ++stamp, buf);
      faces[m] = static_cast<std::uint8_t>(f);
      bij[m] = b ? 1 : 0;
    }
  });

  for (long m = 0; m < total; ++m) {
    ++r.face_histogram[faces[m]];
    if (bij[m]) ++r.bijective_vectors;
  }
  r.parity_violations = count_parity_violations(k, faces, bij);
  return r;
}

struct RibbonSpace {
  int n_slots = 0;
  std::vector<int> sigma;   // word rotation on both sides
  std::vector<int> alpha0;  // fixed matchings; bundle slots overwritten per mask
  struct Bundle {
    std::array<int, 2> white_slots, black_slots;
  };
  std::vector<Bundle> bundles;
};

CensusReport run_ribbon(const IncidenceGraph& g, int jobs) {
  CensusReport r;
  r.mode = CensusMode::ribbon;
  r.mismatches = g.mismatches;
  edge_conventions(g, r);

  RibbonSpace rs;
  std::vector<int> slot_base(g.vertices.size());
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    slot_base[v] = rs.n_slots;
    rs.n_slots += static_cast<int>(g.vertices[v].word.size());
  }
  rs.sigma.resize(rs.n_slots);
  rs.alpha0.assign(rs.n_slots, -1);
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const int len = static_cast<int>(g.vertices[v].word.size());
    for (int i = 0; i < len; ++i) rs.sigma[slot_base[v] + i] = slot_base[v] + (i + 1) % len;
  }

  for (int w = 0; w < g.white_count; ++w) {
    std::vector<int> distinct(g.vertices[w].word);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int b : distinct) {
      std::vector<int> wpos, bpos;
      for (int i = 0; i < static_cast<int>(g.vertices[w].word.size()); ++i)
        if (g.vertices[w].word[i] == b) wpos.push_back(slot_base[w] + i);
      for (int i = 0; i < static_cast<int>(g.vertices[b].word.size()); ++i)
        if (g.vertices[b].word[i] == w) bpos.push_back(slot_base[b] + i);
      if (wpos.size() != bpos.size() || wpos.size() > 2) {
        r.obstructions.push_back({w, b, static_cast<int>(wpos.size()),
                                  static_cast<int>(bpos.size())});
        continue;
      }
      if (wpos.size() == 1) {
        rs.alpha0[wpos[0]] = bpos[0];
        rs.alpha0[bpos[0]] = wpos[0];
      } else {
        rs.bundles.push_back({{wpos[0], wpos[1]}, {bpos[0], bpos[1]}});
      }
    }
  }

  if (!r.obstructions.empty()) return r;  // no consistent gluing to enumerate

  r.forks = detect_forks(g);
  r.fork_count = static_cast<int>(rs.bundles.size());
  const int k = r.fork_count;
  if (k > 24) throw Error("ribbon census needs 2^" + std::to_string(k) + " gluings; refusing past 2^24");
  const long total = 1L << k;
  r.total_vectors = total;
  std::vector<std::uint8_t> faces(total);

  run_over_masks(total, jobs, [&](long lo, long hi, int) {
    std::vector<int> alpha = rs.alpha0;
    std::vector<long> seen(rs.n_slots, -1);
    for (long m = lo; m < hi; ++m) {
      for (int i = 0; i < k; ++i) {
        const auto& bd = rs.bundles[i];
        const bool crossed = (m >> i) & 1;
        alpha[bd.white_slots[0]] = bd.black_slots[crossed ? 1 : 0];
        alpha[bd.black_slots[crossed ? 1 : 0]] = bd.white_slots[0];
        alpha[bd.white_slots[1]] = bd.black_slots[crossed ? 0 : 1];
        alpha[bd.black_slots[crossed ? 0 : 1]] = bd.white_slots[1];
      }
      int f = 0;
      for (int s = 0; s < rs.n_slots; ++s) {
        if (seen[s] == m) continue;
        ++f;
        int x = s;
        while (seen[x] != m) {
          seen[x] = m;
          x = rs.sigma[alpha[x]];
        }
      }
      faces[m] = static_cast<std::uint8_t>(f);
    }
  });

  for (long m = 0; m < total; ++m) ++r.face_histogram[faces[m]];
  r.bijective_vectors = total;  // every gluing composes two permutations
  std::vector<std::uint8_t> bij(total, 1);
  r.parity_violations = count_parity_violations(k, faces, bij);
  return r;
}

}  // namespace

TraceResult trace_faces(const IncidenceGraph& g, const std::vector<ForkSite>& forks,
                        ChoiceVector c) {
  if (c.size != static_cast<int>(forks.size()))
    throw Error("choice vector has " + std::to_string(c.size) + " bits for " +
                std::to_string(forks.size()) + " fork sites");
  const StateSpace sp = build_states(g, forks);
  std::vector<int> T(sp.states.size());
  for (int s = 0; s < static_cast<int>(sp.states.size()); ++s) {
    const State& st = sp.states[s];
    T[s] = (st.fork >= 0 && c.bit(st.fork)) ? st.t1 : st.t0;
  }

  TraceResult out;
  const int n = static_cast<int>(T.size());
  std::vector<int> mark(n, 0);  // 0 unvisited, 1 on current path, 2 settled
  for (int s = 0; s < n; ++s) {
    if (mark[s]) continue;
    std::vector<int> path;
    int x = s;
    while (mark[x] == 0) {
      mark[x] = 1;
      path.push_back(x);
      x = T[x];
    }
    if (mark[x] == 1) {  // closed a new cycle: extract it in traversal order
      std::vector<int> walk;
      auto it = std::find(path.begin(), path.end(), x);
      for (auto p = it; p != path.end(); ++p) walk.push_back(sp.states[*p].at);
      out.walks.push_back(std::move(walk));
      ++out.face_count;
    }
    for (int p : path) mark[p] = 2;
  }

  std::vector<std::uint8_t> indeg(n, 0);
  out.bijective = true;
  for (int s = 0; s < n; ++s) {
    if (indeg[T[s]]) out.bijective = false;
    indeg[T[s]] = 1;
  }
  return out;
}

GenusEstimate genus_estimate(int vertices, int edges, int faces) {
  GenusEstimate e;
  e.defect2 = 2 - vertices + edges - faces;
  e.integral = e.defect2 % 2 == 0;
  e.negative = e.defect2 < 0;
  e.value = e.defect2 / 2.0;
  return e;
}

CensusReport run_census(const IncidenceGraph& g, CensusMode mode, int jobs) {
  return mode == CensusMode::paper ? run_paper(g, jobs) : run_ribbon(g, jobs);
}

nlohmann::json census_report_to_json(const CensusReport& r, const IncidenceGraph& g,
                                     bool include_timings, double elapsed_ms) {
  nlohmann::json j;
  j["mode"] = r.mode == CensusMode::paper ? "paper" : "ribbon";
  j["source"] = r.source;
  j["white_classes"] = g.white_count;
  j["black_classes"] = static_cast<int>(g.vertices.size()) - g.white_count;

  auto side_id = [&](int v) {
    nlohmann::json s;
    s["side"] = g.vertices[v].black ? "black" : "white";
    s["id"] = g.vertices[v].id;
    return s;
  };

  j["edge_conventions"] = {{"white_letter_total", r.white_letter_total},
                           {"black_letter_total", r.black_letter_total},
                           {"max_per_pair", r.max_pair_total}};

  j["fork_count"] = r.fork_count;
  j["fork_sites"] = nlohmann::json::array();
  for (const auto& f : r.forks) {
    nlohmann::json fj;
    fj["at"] = side_id(f.at);
    fj["from"] = side_id(f.from);
    fj["options"] = {g.vertices[f.options[0]].id, g.vertices[f.options[1]].id};
    j["fork_sites"].push_back(fj);
  }

  j["total_vectors"] = r.total_vectors;
  j["face_histogram"] = nlohmann::json::object();
  for (const auto& [f, c] : r.face_histogram) j["face_histogram"][std::to_string(f)] = c;
  j["bijective_vectors"] = r.bijective_vectors;
  j["parity_violations"] = r.parity_violations;

  auto mismatch_list = [&](const std::vector<IncidenceGraph::Mismatch>& ms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : ms) {
      nlohmann::json mj;
      mj["white"] = g.vertices[m.a].id;
      mj["black"] = g.vertices[m.b].id;
      mj["count_in_white"] = m.count_in_a;
      mj["count_in_black"] = m.count_in_b;
      arr.push_back(mj);
    }
    return arr;
  };
  j["multiplicity_mismatches"] = mismatch_list(r.mismatches);
  if (r.mode == CensusMode::ribbon) j["obstructions"] = mismatch_list(r.obstructions);

  const int V = static_cast<int>(g.vertices.size());
  j["genus_estimates"] = nlohmann::json::array();
  for (const auto& [faces, count] : r.face_histogram) {
    for (const auto& [name, edges] :
         std::vector<std::pair<std::string, int>>{{"white_letter_total", r.white_letter_total},
                                                  {"black_letter_total", r.black_letter_total},
                                                  {"max_per_pair", r.max_pair_total}}) {
      const GenusEstimate e = genus_estimate(V, edges, faces);
      nlohmann::json ej;
      ej["faces"] = faces;
      ej["vectors"] = count;
      ej["edge_convention"] = name;
      ej["edges"] = edges;
      ej["euler_defect_twice"] = e.defect2;
      ej["integral"] = e.integral;
      ej["negative"] = e.negative;
      ej["value"] = e.value;
      if (e.integral) ej["genus"] = e.defect2 / 2;
      j["genus_estimates"].push_back(ej);
    }
  }

  if (include_timings) j["elapsed_ms"] = elapsed_ms;
  return j;
}

}  // namespace mapcensus
