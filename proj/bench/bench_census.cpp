#include <benchmark/benchmark.h>

#include "nilfibre/census.hpp"
#include "nilfibre/verify.hpp"

using namespace nilfibre;

namespace {

const Composition& composition_for(int id) {
  static const std::vector<Composition> comps{
      Composition({1, 2, 2, 1}),
      Composition({1, 2, 3, 3, 1, 2}),
      Composition({2, 1, 2, 1, 2, 1}),
      Composition({1, 1, 1, 1, 1, 1, 1, 1}),
  };
  return comps.at(id);
}

void BM_EnumerateSerial(benchmark::State& state) {
  const Composition& comp = composition_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_components_serial(comp));
  state.SetLabel(to_string(comp));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const Composition& comp = composition_for(static_cast<int>(state.range(0)));
  EnumerationOptions opt;
  opt.parallel = true;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_components(comp, opt));
  state.SetLabel(to_string(comp));
}

void BM_CodimSerial(benchmark::State& state) {
  const Composition& comp = composition_for(static_cast<int>(state.range(0)));
  EnumerationOptions opt;
  opt.parallel = false;
  opt.compute_codim = true;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_components(comp, opt));
  state.SetLabel(to_string(comp));
}

void BM_CodimParallel(benchmark::State& state) {
  const Composition& comp = composition_for(static_cast<int>(state.range(0)));
  EnumerationOptions opt;
  opt.compute_codim = true;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_components(comp, opt));
  state.SetLabel(to_string(comp));
}

void BM_VerifySweep(benchmark::State& state) {
  VerifyOptions opt;
  opt.parallel = state.range(1) != 0;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (const auto& comp : compositions_of(n)) benchmark::DoNotOptimize(verify_composition(comp, opt));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CodimSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CodimParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySweep)->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
