#include <benchmark/benchmark.h>

#include "dtwmerge/dtw.hpp"
#include "dtwmerge/evaluation.hpp"
#include "dtwmerge/merge.hpp"
#include "dtwmerge/rng.hpp"
#include "dtwmerge/timeseries.hpp"

namespace {

using namespace dtwmerge;

TimeSeries make_series(std::size_t length, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(length);
  for (auto& x : v) x = rng.gaussian(0.0, 1.0);
  return TimeSeries(std::move(v));
}

void BM_DtwDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TimeSeries x = make_series(n, 1);
  const TimeSeries y = make_series(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtw_distance(x, y));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DtwDistance)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_DtwWithPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TimeSeries x = make_series(n, 3);
  const TimeSeries y = make_series(n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtw(x, y));
  }
}
BENCHMARK(BM_DtwWithPath)->RangeMultiplier(2)->Range(64, 512);

void BM_DtwBandedDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto radius = static_cast<std::size_t>(state.range(1));
  const TimeSeries x = make_series(n, 5);
  const TimeSeries y = make_series(n, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtw_banded_distance(x, y, radius));
  }
}
BENCHMARK(BM_DtwBandedDistance)
    ->Args({512, 8})
    ->Args({512, 32})
    ->Args({512, 128});

void BM_DtwMerge(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TimeSeries x = make_series(n, 7);
  const TimeSeries y = make_series(n, 8);
  Rng rng(99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dtw_merge(x, y, rng));
  }
}
BENCHMARK(BM_DtwMerge)->RangeMultiplier(2)->Range(64, 512);

void BM_Nn1Classify(benchmark::State& state) {
  const auto jobs = static_cast<std::size_t>(state.range(0));
  Rng rng(11);
  LabeledDataset train;
  LabeledDataset test;
  test.split = Split::test;
  for (int i = 0; i < 24; ++i) {
    train.items.push_back(
        LabeledItem{make_series(128, rng.next_u64()), std::to_string(i % 3)});
  }
  for (int i = 0; i < 8; ++i) {
    test.items.push_back(
        LabeledItem{make_series(128, rng.next_u64()), "0"});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(nn1_dtw_classify(train, test, std::nullopt, jobs));
  }
}
BENCHMARK(BM_Nn1Classify)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
