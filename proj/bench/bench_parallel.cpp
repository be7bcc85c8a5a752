// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "sb3/birman.hpp"
#include "sb3/cross_check.hpp"

namespace {

using namespace sb3;

// A monoid word with `m` singular crossings spread between braid letters.
Word singular_word(int m) {
  std::string text;
  for (int i = 0; i < m; ++i) text += (i % 2 ? "s2 t1 s1^-1 " : "t1 s1 s2 ");
  return parse(text);
}

void BM_CrossCheck(benchmark::State& state) {
  const CrossCheckConfig cfg{1, static_cast<std::size_t>(state.range(0)), 16, false};
  for (auto _ : state) benchmark::DoNotOptimize(cross_check(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CrossCheckSerial(benchmark::State& state) {
  const CrossCheckConfig cfg{1, static_cast<std::size_t>(state.range(0)), 16, false};
  for (auto _ : state) benchmark::DoNotOptimize(cross_check_serial(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Eta(benchmark::State& state) {
  const Word w = singular_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eta(w));
}

void BM_EtaSerial(benchmark::State& state) {
  const Word w = singular_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eta_serial(w));
}

void BM_Rho(benchmark::State& state) {
  const ModifiedBurauOrbit orbit = modified_burau(singular_word(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(rho(orbit));
}

void BM_RhoSerial(benchmark::State& state) {
  const ModifiedBurauOrbit orbit = modified_burau(singular_word(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(rho_serial(orbit));
}

}  // namespace

BENCHMARK(BM_CrossCheck)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CrossCheckSerial)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Eta)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_EtaSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_Rho)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_RhoSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
