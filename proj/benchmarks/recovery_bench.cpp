#include <benchmark/benchmark.h>

#include "mphide/attack.hpp"
#include "mphide/hide_recover.hpp"

using namespace mphide;

namespace {

ExactMatrix seed() { return ExactMatrix::parse_rows({{"1+4i", "3-2i"}, {"2-3i", "-1-5i"}}); }

CoprimePair pair_for(benchmark::State& state) {
  return {state.range(0), state.range(1)};
}

void BM_Hide(benchmark::State& state) {
  const CoprimePair pair = pair_for(state);
  const ExactMatrix m = seed();
  for (auto _ : state) benchmark::DoNotOptimize(hide(m, pair));
}

void BM_RecoverIterative(benchmark::State& state) {
  const CoprimePair pair = pair_for(state);
  const HiddenPair hp = hide(seed(), pair).hidden;
  OpCount ops;
  for (auto _ : state) ops = recover_iterative(hp, pair).total;
  state.counters["multiplications"] = static_cast<double>(ops.multiplications);
  state.counters["inversions"] = static_cast<double>(ops.inversions);
}

void BM_RecoverBezout(benchmark::State& state) {
  const CoprimePair pair = pair_for(state);
  const HiddenPair hp = hide(seed(), pair).hidden;
  OpCount ops;
  for (auto _ : state) ops = recover_bezout(hp, pair).ops;
  state.counters["multiplications"] = static_cast<double>(ops.multiplications);
  state.counters["inversions"] = static_cast<double>(ops.inversions);
}

void BM_BruteForceAttack(benchmark::State& state) {
  const HiddenPair hp = hide(seed(), CoprimePair(17, 11)).hidden;
  AttackBudget budget;
  budget.threads = static_cast<unsigned>(state.range(0));
  std::uint64_t mults = 0;
  for (auto _ : state) mults = brute_force_attack(hp, budget).multiplications;
  state.counters["multiplications"] = static_cast<double>(mults);
}

}  // namespace

BENCHMARK(BM_Hide)->Args({17, 11})->Args({1001, 213});
BENCHMARK(BM_RecoverIterative)->Args({17, 11})->Args({1019, 239})->Args({1001, 213});
// (1019, 239) is left out: C^-110 D^469 forms powers near M^112000 and takes seconds.
BENCHMARK(BM_RecoverBezout)->Args({17, 11})->Args({1001, 213});
BENCHMARK(BM_BruteForceAttack)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
