#include <benchmark/benchmark.h>

#include "akbk/classify.hpp"
#include "akbk/lemmas.hpp"
#include "akbk/search.hpp"

using namespace akbk;

namespace {

void BM_FactorizeU64(benchmark::State& state) {
  const Int n = Int("614889782588491410");  // product of the first 15 primes
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(n));
  }
}
BENCHMARK(BM_FactorizeU64);

void BM_FactorizeWideSemiprime(benchmark::State& state) {
  // 78-bit repunit cofactor with two ~11-digit factors.
  const Int n = Int("75449464927") * Int("117942356533");
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(n));
  }
}
BENCHMARK(BM_FactorizeWideSemiprime);

void BM_IsPrimeCertified(benchmark::State& state) {
  const Int n = (Int(1) << 89) - 1;  // beyond the 13-base deterministic bound
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_prime(n));
  }
}
BENCHMARK(BM_IsPrimeCertified);

void BM_SolveInstance(benchmark::State& state) {
  const auto inst = EquationInstance::create(8, 9, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_instance(inst, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_SolveInstance)->Arg(8)->Arg(12);

void BM_PrunedSearch(benchmark::State& state) {
  const auto inst = EquationInstance::create(5, 9, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pruned_search_xzy(inst, 12));
  }
}
BENCHMARK(BM_PrunedSearch);

void BM_Enum2p(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enum_2p(static_cast<int>(state.range(0)), 4));
  }
}
BENCHMARK(BM_Enum2p)->Arg(50)->Arg(150);

void BM_RepunitDivisorCheck(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(repunit_divisor_check(199, 11));
  }
}
BENCHMARK(BM_RepunitDivisorCheck);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(census(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Census)->Arg(100)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
