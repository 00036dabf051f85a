#include <benchmark/benchmark.h>

#include "genome/biset.hpp"
#include "genome/genetic.hpp"
#include "genome/lattice.hpp"
#include "genome/spec.hpp"
#include "genome/transfer.hpp"

using namespace genome;

namespace {

const char* const kSpecs[] = {"C3 x C3 x C3", "ES+(3)", "ES-(3) x C3", "perm[(1 2 3); (1 4 7)(2 5 8)(3 6 9)]",
                              "C3 x C3 x C3 x C3"};

void BM_AllSubgroups(benchmark::State& state) {
  Group g = group_from_spec(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_AllSubgroups)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_GeneticBasis(benchmark::State& state) {
  Group g = group_from_spec(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(genetic_basis(g, 3));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_GeneticBasis)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_InflationGenomeMap(benchmark::State& state) {
  Group g = group_from_spec(kSpecs[state.range(0)]);
  Subgroup z = center(g);
  Subgroup n = subgroup_generated(g, {z.elements()[1]});
  Biset inf = inflation(n);
  GenomeDescriptor src = genome_of(inf.right(), 3);
  GenomeDescriptor tgt = genome_of(g, 3);
  for (auto _ : state) benchmark::DoNotOptimize(genome_map(inf, src, tgt));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_InflationGenomeMap)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Verlagerung(benchmark::State& state) {
  Group g = group_from_spec(kSpecs[state.range(0)]);
  Subgroup h = subgroup_generated(g, {center(g).elements()[1]});
  Biset res = restriction(h);
  for (auto _ : state) benchmark::DoNotOptimize(verlagerung(res));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_Verlagerung)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_ParseAndBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(group_from_spec("perm[(1 2 3); (1 4 7)(2 5 8)(3 6 9)]"));
}
BENCHMARK(BM_ParseAndBuild)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
