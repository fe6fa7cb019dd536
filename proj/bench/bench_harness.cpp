#include <benchmark/benchmark.h>

#include "dyckzeta/harness.hpp"
#include "dyckzeta/statistics.hpp"
#include "dyckzeta/zeta.hpp"
#include "dyckzeta/scaffolding.hpp"
#include "dyckzeta/enumerate.hpp"

using namespace dyckzeta;

namespace {

CheckSpec equivalence(int n) { return make_checks({"classical-equivalence"}, n, n).front(); }

void BM_EquivalenceSerial(benchmark::State& state) {
  const auto spec = equivalence(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_check_serial(spec).mismatches);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(catalan_u64(spec.n_min)));
}

void BM_EquivalenceParallel(benchmark::State& state) {
  const auto spec = equivalence(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_check(spec, workers).mismatches);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(catalan_u64(spec.n_min)));
}

void BM_QTCatalan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qt_catalan(n, QTMode::dinv_area).term_count());
}

template <DyckWord (*Map)(const DyckWord&)>
void BM_Map(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<DyckWord> words;
  for (const auto& w : enumerate(n)) words.push_back(w);
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(Map(w).bits());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}

DyckWord default_scaffolding(const DyckWord& w) { return scaffolding(w); }

} // namespace

BENCHMARK(BM_EquivalenceSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EquivalenceParallel)->Args({12, 1})->Args({12, 2})->Args({12, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QTCatalan)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Map<zeta_sweep>)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Map<zeta_area_vector>)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Map<default_scaffolding>)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Map<scaffolding_grouped>)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
