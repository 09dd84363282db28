#include <benchmark/benchmark.h>

#include "courteous/bounds.hpp"
#include "courteous/exact.hpp"
#include "courteous/poly.hpp"
#include "courteous/simulate.hpp"
#include "courteous/theatre.hpp"

using namespace courteous;

namespace {

void BM_UniformOneCourteous(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(uniform_one_courteous(n, 0.5));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_UniformOneCourteous)->Arg(1000)->Arg(10000)->Arg(100000)->Complexity();

void BM_GeometricLeft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_left(n, 0.5));
  }
}
BENCHMARK(BM_GeometricLeft)->Arg(1000)->Arg(10000);

void BM_ZipfRightSelfish(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zipf_right_selfish(n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ZipfRightSelfish)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

void BM_ZipfRightPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zipf_right_polynomial(n));
  }
}
BENCHMARK(BM_ZipfRightPolynomial)->Arg(40)->Arg(100)->Arg(200);

void BM_Lemma1Sum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma1_sum(n));
  }
}
BENCHMARK(BM_Lemma1Sum)->Arg(10000)->Arg(100000);

void BM_ModelTrials(benchmark::State& state) {
  const RowSpec spec{static_cast<int>(state.range(0)), Entrances::OneLeft,
                     SeatDistribution::Uniform, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(model_trial_values(spec, 1000, 42));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_ModelTrials)->Arg(50)->Arg(200)->Arg(1000);

void BM_PhysicalTrials(benchmark::State& state) {
  const RowSpec spec{static_cast<int>(state.range(0)), Entrances::Two,
                     SeatDistribution::Uniform, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(physical_trial_values(spec, 1000, 42));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_PhysicalTrials)->Arg(50)->Arg(200)->Arg(1000);

void BM_TheatreExpected(benchmark::State& state) {
  const TheatreLayout layout = lipari_layout(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_theatre(layout, 0.5, SeatDistribution::Uniform));
  }
}
BENCHMARK(BM_TheatreExpected)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
