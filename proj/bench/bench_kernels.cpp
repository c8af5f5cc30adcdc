// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to compare thread counts.

#include <benchmark/benchmark.h>

#include <wallisqm/parallel.hpp>
#include <wallisqm/variational.hpp>
#include <wallisqm/wallis_series.hpp>

#include <cstdint>

namespace {

void BM_SumA_Serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wallisqm::sum_a_direct_serial(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SumA_Parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wallisqm::sum_a_direct(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SumB_Serial(benchmark::State& state) {
  const wallisqm::GeneralizedParams p{1.0, 2.3};
  for (auto _ : state) benchmark::DoNotOptimize(wallisqm::sum_b_direct_serial(p, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SumB_Parallel(benchmark::State& state) {
  const wallisqm::GeneralizedParams p{1.0, 2.3};
  for (auto _ : state) benchmark::DoNotOptimize(wallisqm::sum_b_direct(p, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ReciprocalSquares_Serial(benchmark::State& state) {
  const auto term = [](std::int64_t i) {
    const double x = static_cast<double>(i);
    return 1.0 / (x * x);
  };
  for (auto _ : state) benchmark::DoNotOptimize(wallisqm::kernels::compensated_sum_serial(1, state.range(0), term));
}

void BM_ReciprocalSquares_Parallel(benchmark::State& state) {
  const auto term = [](std::int64_t i) {
    const double x = static_cast<double>(i);
    return 1.0 / (x * x);
  };
  for (auto _ : state) benchmark::DoNotOptimize(wallisqm::kernels::compensated_sum(1, state.range(0), term));
}

void BM_NumericRatios_Serial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(wallisqm::ratio_sequence_serial(
        wallisqm::TrialFamily::Lorentz, wallisqm::PotentialKind::Coulomb, state.range(0), wallisqm::Method::Numeric));
  }
}

void BM_NumericRatios_Parallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(wallisqm::ratio_sequence(wallisqm::TrialFamily::Lorentz, wallisqm::PotentialKind::Coulomb,
                                                      state.range(0), wallisqm::Method::Numeric));
  }
}

}  // namespace

BENCHMARK(BM_SumA_Serial)->RangeMultiplier(10)->Range(10000, 1000000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SumA_Parallel)->RangeMultiplier(10)->Range(10000, 1000000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SumB_Serial)->RangeMultiplier(10)->Range(10000, 1000000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SumB_Parallel)->RangeMultiplier(10)->Range(10000, 1000000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ReciprocalSquares_Serial)->Arg(10000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReciprocalSquares_Parallel)->Arg(10000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NumericRatios_Serial)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NumericRatios_Parallel)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
