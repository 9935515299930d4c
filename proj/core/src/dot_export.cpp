#include "mapcensus/dot_export.hpp"

#include <algorithm>

namespace mapcensus {

std::string incidence_dot(const IncidenceGraph& g) {
  std::string out = "graph incidence {\n";
  out += "  layout=neato;\n  overlap=false;\n  splines=true;\n";
  out += "  node [fontsize=10, width=0.3, fixedsize=true];\n";
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const auto& vx = g.vertices[v];
    const std::string name = (vx.black ? "b_" : "w_") + vx.id;
    out += "  \"" + name + "\" [label=\"" + vx.id + "\", shape=circle";
    if (vx.black) out += ", style=filled, fillcolor=black, fontcolor=white";
    out += "];\n";
  }
  for (int w = 0; w < g.white_count; ++w) {
    std::vector<int> distinct(g.vertices[w].word);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int b : distinct) {
      const int mult = std::max(g.occurrences(b, w), g.occurrences(w, b));
      for (int i = 0; i < mult; ++i)
        out += "  \"w_" + g.vertices[w].id + "\" -- \"b_" + g.vertices[b].id + "\";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace mapcensus
