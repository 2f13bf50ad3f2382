#include <benchmark/benchmark.h>

#include "ratknot/census.hpp"
#include "ratknot/factor.hpp"
#include "ratknot/gf_catalog.hpp"
#include "ratknot/invariants.hpp"
#include "ratknot/lens.hpp"
#include "ratknot/monoid.hpp"
#include "ratknot/pipeline.hpp"

using namespace ratknot;

namespace {

void BM_Classify(benchmark::State& state) {
  const std::vector<Integer> word = {4, -2, 6, 2, 2, -2, 4, 2};
  for (auto _ : state) {
    KnotClass k = classify(ConwayWord::even(word));
    benchmark::DoNotOptimize(compute_invariants(k));
  }
}
BENCHMARK(BM_Classify);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census(n, CensusFilter{}, 1));
}
BENCHMARK(BM_Census)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_SumAbsSignature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sum_abs_signature(n));
}
BENCHMARK(BM_SumAbsSignature)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ExpandCatalog(benchmark::State& state) {
  const RationalGF gf = gf_catalog("u1");
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand(gf, order));
}
BENCHMARK(BM_ExpandCatalog)->Arg(50)->Arg(200);

void BM_BuildG1(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_G1(order));
}
BENCHMARK(BM_BuildG1)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_Sigma0Signature(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_sigma0_signature(build_G1_signature(order)));
}
BENCHMARK(BM_Sigma0Signature)->Arg(26)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Factorize(benchmark::State& state) {
  const Integer n = Integer("999999999989") * Integer("1000000000039");
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize)->Unit(benchmark::kMillisecond);

void BM_LensSweep(benchmark::State& state) {
  const auto p_max = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lens_sweep(3, p_max, 1));
}
BENCHMARK(BM_LensSweep)->Arg(10000)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_SnSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sn_search(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_SnSearch)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Orbit(benchmark::State& state) {
  const std::vector<Generator> gens = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Orbit(gens, depth).size());
}
BENCHMARK(BM_Orbit)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Cnj1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_cnj1(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Cnj1)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
