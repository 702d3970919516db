#include <benchmark/benchmark.h>

#include "hcn/champions.hpp"
#include "hcn/criteria.hpp"
#include "hcn/ga.hpp"

using namespace hcn;

static void BM_GronwallG(benchmark::State& state) {
  FactoredNumber n = ca_sequence(static_cast<std::size_t>(state.range(0))).back().n;
  const auto prec = static_cast<mpfr_prec_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gronwall_G(n, prec));
}
BENCHMARK(BM_GronwallG)->Args({8, 128})->Args({8, 512})->Args({200, 128})->Args({200, 1024});

static void BM_CaWalk(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ca_sequence(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CaWalk)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_RobinBlock(benchmark::State& state) {
  const auto lo = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(robin_verify_range(lo, lo + 9999));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_RobinBlock)->Arg(5041)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_SaEnumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sa_enumerate(BigInt(static_cast<unsigned long>(state.range(0)))));
}
BENCHMARK(BM_SaEnumerate)->Arg(1000000)->Arg(100000000)->Unit(benchmark::kMillisecond);

static void BM_Breakpoint(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(breakpoint_epsilon(9973, 2, Rational(1, 2), 128));
}
BENCHMARK(BM_Breakpoint);

static void BM_Ga2Bounded(benchmark::State& state) {
  FactoredNumber n = factor(std::uint64_t{720720});
  for (auto _ : state) benchmark::DoNotOptimize(ga2_check_bounded(n, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Ga2Bounded)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
