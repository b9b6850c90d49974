#include <benchmark/benchmark.h>

#include "rimwalk/character.hpp"
#include "rimwalk/identities.hpp"
#include "rimwalk/virtual_character.hpp"

using namespace rimwalk;

static void BM_CharacterTable(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CharacterEvaluator eval;
    benchmark::DoNotOptimize(character_table(k, eval));
  }
}
BENCHMARK(BM_CharacterTable)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_CharacterTableUncached(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CharacterEvaluator eval(false);
    benchmark::DoNotOptimize(character_table(k, eval));
  }
}
BENCHMARK(BM_CharacterTableUncached)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_VerifyTheorem(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = 2 * k + 6;
  for (auto _ : state) {
    CharacterEvaluator eval;
    auto rep = verify_theorem(k, n, {.jobs = 1, .evaluator = &eval});
    benchmark::DoNotOptimize(rep.checked);
  }
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_ConjectureScan(benchmark::State& state) {
  const int hi = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_conjectures(4, hi));
}
BENCHMARK(BM_ConjectureScan)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

static void BM_LargeDimension(benchmark::State& state) {
  const Partition box = Partition::rectangle(10, 5);
  const Partition identity = Partition::rectangle(1, 50);
  for (auto _ : state) {
    CharacterEvaluator eval;
    benchmark::DoNotOptimize(eval.value(box, identity));
  }
}
BENCHMARK(BM_LargeDimension)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
