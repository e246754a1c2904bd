#include <benchmark/benchmark.h>

#include "frobcx/enumerate.hpp"
#include "frobcx/poincare.hpp"
#include "frobcx/spectral.hpp"
#include "frobcx/transfer.hpp"

namespace {

using namespace frobcx;

// Args: p, d, e.
void BM_Enumeration(benchmark::State& state) {
  const Prime p(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_basis_enumeration(
        p, state.range(1), state.range(2), {.threads = 1}));
  }
}
BENCHMARK(BM_Enumeration)->Args({2, 4, 6})->Args({2, 6, 5})->Args({3, 4, 3});

void BM_CarryVectors(benchmark::State& state) {
  const PoincareTable table(Prime(state.range(0)), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_basis_carryvectors(table, state.range(2)));
  }
}
BENCHMARK(BM_CarryVectors)->Args({2, 4, 6})->Args({2, 6, 5})->Args({3, 4, 3})->Args({2, 6, 10});

void BM_Transfer(benchmark::State& state) {
  const Prime p(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(c_de(p, state.range(1), state.range(2)));
  }
}
BENCHMARK(BM_Transfer)->Args({2, 4, 6})->Args({2, 6, 10})->Args({2, 6, 200})->Args({7, 8, 50});

void BM_PerronInterval(benchmark::State& state) {
  const auto sys = build_system(Prime(state.range(0)), state.range(1));
  const Rational tol(1, 1'000'000'000'000);
  for (auto _ : state) benchmark::DoNotOptimize(perron_interval(sys.U, tol));
}
BENCHMARK(BM_PerronInterval)->Args({2, 4})->Args({3, 5})->Args({5, 8});

}  // namespace

BENCHMARK_MAIN();
