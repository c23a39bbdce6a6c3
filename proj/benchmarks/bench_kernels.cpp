#include <benchmark/benchmark.h>

#include <cmath>

#include "dml/characters.hpp"
#include "dml/lfunc.hpp"
#include "dml/sieve.hpp"
#include "dml/sums.hpp"
#include "dml/theta.hpp"

using namespace dml;

static void BM_SegmentedSieve(benchmark::State& state) {
  const auto limit = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(segmented_sieve(limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SegmentedSieve)->Arg(100'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_Enumerate(benchmark::State& state) {
  const auto q = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_characters(q));
}
BENCHMARK(BM_Enumerate)->Arg(1009)->Arg(10007)->Unit(benchmark::kMicrosecond);

static void BM_HurwitzZeta(benchmark::State& state) {
  const EvalPoint s{0.5, static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta(s, 0.37));
}
BENCHMARK(BM_HurwitzZeta)->Arg(1)->Arg(100);

static void BM_LEvaluatorAllCharacters(benchmark::State& state) {
  const auto q = static_cast<u64>(state.range(0));
  const auto chars = primitive_characters(q);
  for (auto _ : state) {
    const LEvaluator eval(q, {0.5, 1.0});
    for (const auto& chi : chars) benchmark::DoNotOptimize(eval(chi));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(chars.size()));
}
BENCHMARK(BM_LEvaluatorAllCharacters)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);

static void BM_ThetaMoment(benchmark::State& state) {
  const auto q = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta_moment(q, 3, Parity::even));
}
BENCHMARK(BM_ThetaMoment)->Arg(1009)->Arg(2999)->Unit(benchmark::kMillisecond);

static void BM_ThetaMellin(benchmark::State& state) {
  const auto even = primitive_characters(37, Parity::even);
  for (auto _ : state) benchmark::DoNotOptimize(theta_mellin_batch(even, 1.0, 40.0));
}
BENCHMARK(BM_ThetaMellin)->Unit(benchmark::kMillisecond);

static void BM_CharSumMoment(benchmark::State& state) {
  const auto q = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(char_sum_moment(q, 3, std::sqrt(static_cast<double>(q))));
}
BENCHMARK(BM_CharSumMoment)->Arg(2999)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
