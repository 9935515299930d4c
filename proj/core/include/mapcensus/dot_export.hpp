#pragma once

#include <string>

#include "mapcensus/census.hpp"

namespace mapcensus {

// Graphviz rendering of the bipartite incidence graph: white classes as
// circles, black classes as filled discs, one edge line per parallel strand
// (multiplicity = max of the two sides' occurrence counts).  Byte-stable for
// a given graph.
std::string incidence_dot(const IncidenceGraph& g);

}  // namespace mapcensus
