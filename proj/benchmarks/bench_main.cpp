#include <benchmark/benchmark.h>

#include "parkphase/coupling.hpp"
#include "parkphase/exact.hpp"
#include "parkphase/lattice.hpp"
#include "parkphase/parking.hpp"

using namespace parkphase;

namespace {

// Near-full tables are where probing cost diverges: l = sqrt(m) empty places.
std::vector<Place> tries_for(Place m) {
  Rng rng(1);
  const auto l = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  return uniform_tries(m, m - l, rng);
}

void BM_Park(benchmark::State& state) {
  const Place m = state.range(0);
  const auto t = tries_for(m);
  for (auto _ : state) benchmark::DoNotOptimize(park(m, t));
  state.SetComplexityN(m);
}
BENCHMARK(BM_Park)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_ParkNaive(benchmark::State& state) {
  const Place m = state.range(0);
  const auto t = tries_for(m);
  for (auto _ : state) benchmark::DoNotOptimize(park_naive(m, t));
  state.SetComplexityN(m);
}
BENCHMARK(BM_ParkNaive)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_ProfileFromCounts(benchmark::State& state) {
  const Place m = state.range(0);
  const auto cc = centered_counts(m, tries_for(m));
  for (auto _ : state) benchmark::DoNotOptimize(profile_from_counts(cc));
}
BENCHMARK(BM_ProfileFromCounts)->Arg(1 << 16);

void BM_Psi(benchmark::State& state) {
  const auto e = sample_excursion(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(psi(e, 1.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Psi)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_SampleExcursion(benchmark::State& state) {
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sample_excursion(state.range(0), rng));
}
BENCHMARK(BM_SampleExcursion)->Arg(10000)->Arg(100000);

void BM_PhiExact(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(phi(m, m - 2, m / 2));
}
BENCHMARK(BM_PhiExact)->Arg(30)->Arg(300)->Arg(3000);

void BM_LogPhi(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(log_phi(m, m - 2, m / 2));
}
BENCHMARK(BM_LogPhi)->Arg(100000);

void BM_LargestBlockCdf(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(largest_block_cdf(1.0, x));
}
BENCHMARK(BM_LargestBlockCdf)->Arg(30)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
