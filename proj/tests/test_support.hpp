#pragma once

#include <random>

#include "mapcensus/oriented_map.hpp"
#include "mapcensus/permutation.hpp"
#include "mapcensus/workspace.hpp"

namespace mapcensus::testing {

// The full pipeline is deterministic and takes a moment; tests share one
// instance per binary.
const Workspace& shared_workspace();

Permutation random_permutation(std::mt19937& rng, int n);

// Random connected map on 2*n_edges darts: uniform matching for alpha,
// uniform permutation for sigma, resampled until connected.
OrientedMap random_map(std::mt19937& rng, int n_edges);

// As above, additionally conditioned on genus 0.
OrientedMap random_plane_map(std::mt19937& rng, int n_edges);

}  // namespace mapcensus::testing
