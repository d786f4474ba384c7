#include <benchmark/benchmark.h>

#include "pifrac/bbp.hpp"
#include "pifrac/fraction_table.hpp"

namespace {

void BM_HexDigitsAt(benchmark::State& state) {
  const auto position = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pifrac::bbp::hex_digits_at(position, 24));
  }
}
BENCHMARK(BM_HexDigitsAt)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ModPow(benchmark::State& state) {
  std::uint64_t exponent = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pifrac::bbp::mod_pow(16, exponent++, (1ull << 40) - 87));
  }
}
BENCHMARK(BM_ModPow);

void BM_BuildTable(benchmark::State& state) {
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pifrac::build_table(count));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildTable)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
