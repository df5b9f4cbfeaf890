#include <benchmark/benchmark.h>

#include "fibgray/fibgray.hpp"

namespace {

using namespace fibgray;

void BM_EncodePell(benchmark::State& state) {
  const NumerationBasis pell(Pell{});
  const Natural value = Natural(1) << static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(encode(pell, value));
}
BENCHMARK(BM_EncodePell)->Arg(20)->Arg(64)->Arg(256);

void BM_RoundTripFibonacci(benchmark::State& state) {
  const NumerationBasis fib(KBonacci{2});
  for (auto _ : state) {
    for (int n = 0; n < 1000; ++n) benchmark::DoNotOptimize(decode(fib, encode(fib, n)));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_RoundTripFibonacci);

void BM_LanguageByCounting(benchmark::State& state) {
  const NumerationBasis fib(KBonacci{2});
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(language_by_counting(fib, m));
}
BENCHMARK(BM_LanguageByCounting)->Arg(12)->Arg(18);

void BM_GrayCursor(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  std::size_t emitted = 0;
  for (auto _ : state) {
    for (GrayCursor c = gray_language(k, m); !c.done(); c.advance()) {
      benchmark::DoNotOptimize(c.current_digits().data());
      ++emitted;
    }
  }
  state.SetItemsProcessed(static_cast<int64_t>(emitted));
}
BENCHMARK(BM_GrayCursor)->Args({2, 20})->Args({3, 18});

void BM_BrgcCursor(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::size_t emitted = 0;
  for (auto _ : state) {
    for (GrayCursor c = brgc_cursor(m); !c.done(); c.advance()) ++emitted;
  }
  state.SetItemsProcessed(static_cast<int64_t>(emitted));
}
BENCHMARK(BM_BrgcCursor)->Arg(16);

void BM_PermGrayCursor(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  std::size_t emitted = 0;
  for (auto _ : state) {
    PermGrayCursor c(k, m);
    while (auto p = c.next()) {
      benchmark::DoNotOptimize(p->size());
      ++emitted;
    }
  }
  state.SetItemsProcessed(static_cast<int64_t>(emitted));
}
BENCHMARK(BM_PermGrayCursor)->Args({2, 18})->Args({4, 14});

void BM_PermFilterOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle_filter_perms(3, 8));
}
BENCHMARK(BM_PermFilterOracle);

}  // namespace

BENCHMARK_MAIN();
