#include <benchmark/benchmark.h>

#include "hrlb/behrend.hpp"

using namespace hrlb;

static void BM_SphereSet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sphere_set(state.range(0), 3).size());
}
BENCHMARK(BM_SphereSet)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_GreedySet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(greedy_set(state.range(0), 3).size());
}
BENCHMARK(BM_GreedySet)->Arg(1000)->Arg(10000);

static void BM_VerifyThreeTerm(benchmark::State& state) {
  auto b = greedy_set(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_solution_free(b, 3, state.range(0)).status);
  state.counters["size"] = static_cast<double>(b.size());
}
BENCHMARK(BM_VerifyThreeTerm)->Arg(1000)->Arg(10000);

static void BM_VerifyFourTerm(benchmark::State& state) {
  auto b = greedy_set(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(verify_solution_free(b, 4, state.range(0)).status);
}
BENCHMARK(BM_VerifyFourTerm)->Arg(200)->Arg(1000);

static void BM_ExactMaximum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_solution_free_bruteforce(state.range(0), 3).size);
}
BENCHMARK(BM_ExactMaximum)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
