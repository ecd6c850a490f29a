#include <benchmark/benchmark.h>

#include "ternrec/cubic.hpp"
#include "ternrec/qseries.hpp"
#include "ternrec/quadform.hpp"
#include "ternrec/recurrence.hpp"
#include "ternrec/verifier.hpp"

using namespace ternrec;

namespace {

void BM_TermMod(benchmark::State& state) {
  const RecurrenceSpec s = named_spec("tribonacci");
  const u64 p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(term_mod(s, p - 1, p));
}
BENCHMARK(BM_TermMod)->Arg(99991)->Arg(1'000'000'007)->Arg(2305843009213693951);

void BM_NpGcd(benchmark::State& state) {
  const Cubic f(1, 1, 2);
  const u64 p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(np_gcd(f, p));
}
BENCHMARK(BM_NpGcd)->Arg(99991)->Arg(2305843009213693951);

void BM_NpBrute(benchmark::State& state) {
  const Cubic f(1, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(np_brute(f, 99991));
}
BENCHMARK(BM_NpBrute);

void BM_Represent(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(represent(3, p));
}
BENCHMARK(BM_Represent)->Arg(99991)->Arg(2305843009213693951);

void BM_Represent4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(represent4(83, 99991));
}
BENCHMARK(BM_Represent4);

void BM_Delta(benchmark::State& state) {
  const auto limit = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_mod(limit, 23));
}
BENCHMARK(BM_Delta)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  const TheoremCase& c = find_case("tribonacci");
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(c, 1'000'000, workers));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
