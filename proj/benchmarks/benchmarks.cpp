#include <benchmark/benchmark.h>

#include <random>

#include "mapcensus/canonical.hpp"
#include "mapcensus/catalog.hpp"
#include "mapcensus/census.hpp"
#include "mapcensus/golden.hpp"
#include "mapcensus/quad.hpp"
#include "mapcensus/words.hpp"
#include "mapcensus/workspace.hpp"

namespace {

using namespace mapcensus;

// deterministic connected map with the given edge count (seeded by it)
OrientedMap sample_map(int n_edges) {
  std::mt19937 rng(static_cast<unsigned>(n_edges));
  const int n = 2 * n_edges;
  std::vector<Dart> darts(n), sigma(n);
  for (;;) {
    for (int i = 0; i < n; ++i) darts[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(darts[i], darts[rng() % (i + 1)]);
    std::vector<Dart> alpha(n);
    for (int i = 0; i < n; i += 2) {
      alpha[darts[i]] = darts[i + 1];
      alpha[darts[i + 1]] = darts[i];
    }
    for (int i = 0; i < n; ++i) sigma[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(sigma[i], sigma[rng() % (i + 1)]);
    try {
      return OrientedMap(Permutation(alpha), Permutation(sigma));
    } catch (const Error&) {
    }
  }
}

const Catalog& m33() {
  static const Catalog c = build_m33();
  return c;
}

void BM_canonical_code(benchmark::State& state) {
  const OrientedMap m = sample_map(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CanonicalCode c = canonical_code(m);
    benchmark::DoNotOptimize(c.bytes.data());
  }
}
BENCHMARK(BM_canonical_code)->Arg(4)->Arg(8)->Arg(16);

void BM_enumerate_m33(benchmark::State& state) {
  for (auto _ : state) {
    auto maps = enumerate_plane_maps(3, 3);
    benchmark::DoNotOptimize(maps.size());
  }
}
BENCHMARK(BM_enumerate_m33)->Unit(benchmark::kMillisecond);

void BM_white_word(benchmark::State& state) {
  static const M446Build b = build_m446(m33());
  const ColoredMap q = quadrangulate(m33().classes.front().map);
  for (auto _ : state) {
    CyclicWord w = white_word(q, b.catalog);
    benchmark::DoNotOptimize(w.letters.size());
  }
}
BENCHMARK(BM_white_word)->Unit(benchmark::kMicrosecond);

void BM_workspace(benchmark::State& state) {
  for (auto _ : state) {
    Workspace ws = build_workspace();
    benchmark::DoNotOptimize(ws.white_raw.size());
  }
}
BENCHMARK(BM_workspace)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_fixture_census(benchmark::State& state) {
  const GoldenBundle& g = golden_bundle();
  const IncidenceGraph graph = assemble_incidence(g.white_reduced, g.black_reduced);
  for (auto _ : state) {
    CensusReport r = run_census(graph, CensusMode::paper, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r.total_vectors);
  }
}
BENCHMARK(BM_fixture_census)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ribbon_census(benchmark::State& state) {
  const GoldenBundle& g = golden_bundle();
  const IncidenceGraph graph = assemble_incidence(g.white_reduced, g.black_reduced);
  for (auto _ : state) {
    CensusReport r = run_census(graph, CensusMode::ribbon, 1);
    benchmark::DoNotOptimize(r.total_vectors);
  }
}
BENCHMARK(BM_ribbon_census)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
