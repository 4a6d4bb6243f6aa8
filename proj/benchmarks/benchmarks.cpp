#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "motivic/arc_oracle.hpp"
#include "motivic/covers.hpp"
#include "motivic/intmat.hpp"
#include "motivic/resolution.hpp"
#include "motivic/toric.hpp"

namespace {

using namespace motivic;

ResolutionData chain(long components) {
  std::vector<ResolutionComponent> comps;
  for (long i = 0; i < components; ++i) {
    comps.push_back({"E" + std::to_string(i + 1), i % 3 + 1, (i + 1) % 3 + 1});
  }
  return ResolutionData(3, std::move(comps));
}

void BM_EnumerateArcs(benchmark::State& state) {
  const ArcCountTask task{3, state.range(0), ArcMode::Monic, {2, {2, 1}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_arcs(task, 1));
  }
}
BENCHMARK(BM_EnumerateArcs)->DenseRange(2, 5);

void BM_EquivariantZeta(benchmark::State& state) {
  const ResolutionData data = chain(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(equivariant_zeta(data));
  }
}
BENCHMARK(BM_EquivariantZeta)->DenseRange(1, 6);

void BM_SelfDuality(benchmark::State& state) {
  const ResolutionData data = chain(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_self_duality(data).pass);
  }
}
BENCHMARK(BM_SelfDuality)->DenseRange(1, 6);

void BM_StellarRefine(benchmark::State& state) {
  const SimplicialFan cone(2, {{1, 0}, {1, state.range(0)}}, {{0, 1}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(stellar_refine(cone).rays().size());
  }
}
BENCHMARK(BM_StellarRefine)->RangeMultiplier(2)->Range(2, 32);

void BM_HermiteNormalForm(benchmark::State& state) {
  const long n = state.range(0);
  intmat::Matrix m(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n)));
  // Deterministic full-rank matrix with mixed signs and growing entries.
  long v = 3;
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      v = (v * 31 + 17) % 201;
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v - 100;
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(intmat::hnf(m).size());
  }
}
BENCHMARK(BM_HermiteNormalForm)->DenseRange(2, 8);

void BM_HilbertBasis(benchmark::State& state) {
  const covers::LatticeModel lattice =
      covers::lattice_of_cover({state.range(0), {1, state.range(0) - 1}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(covers::hilbert_basis(lattice).size());
  }
}
BENCHMARK(BM_HilbertBasis)->DenseRange(3, 8);

}  // namespace

BENCHMARK_MAIN();
