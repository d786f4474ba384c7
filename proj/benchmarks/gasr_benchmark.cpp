#include <benchmark/benchmark.h>

#include "pifrac/benchmarks.hpp"
#include "pifrac/fraction_table.hpp"
#include "pifrac/gasr.hpp"
#include "pifrac/sampling.hpp"

namespace {

const pifrac::PiFractionTable& shared_table() {
  static const pifrac::PiFractionTable table = pifrac::build_table(4000);
  return table;
}

void BM_NextUniform(benchmark::State& state) {
  pifrac::sampling::SamplerState cursor{&shared_table(), 1, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pifrac::sampling::next_uniform(cursor, 0.0, 1.0));
  }
}
BENCHMARK(BM_NextUniform);

void BM_HaltonPoint(benchmark::State& state) {
  std::uint64_t index = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pifrac::sampling::halton_point(index++, 30));
  }
}
BENCHMARK(BM_HaltonPoint);

void BM_GasrRun(benchmark::State& state) {
  pifrac::gasr::GasrConfig config;
  config.population = static_cast<int>(state.range(0));
  config.generations = 20;
  config.early_termination = false;
  config.spec =
      pifrac::benchmarks::default_spec(pifrac::benchmarks::FunctionId::exponential, 10);
  config.table = &shared_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pifrac::gasr::run(config));
  }
}
BENCHMARK(BM_GasrRun)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
  const auto spec =
      pifrac::benchmarks::default_spec(pifrac::benchmarks::FunctionId::rastrigin, 30);
  const std::vector<double> x(30, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pifrac::benchmarks::evaluate(spec, x));
  }
}
BENCHMARK(BM_Evaluate);

}  // namespace

BENCHMARK_MAIN();
