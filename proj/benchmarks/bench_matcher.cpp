#include <benchmark/benchmark.h>

#include <random>

#include "strew/matcher.hpp"
#include "testsupport.hpp"

using namespace strew;

static void BuildMatcher(benchmark::State& state) {
  RewriteSystem system = test::scaling_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    MatchAutomaton automaton(system);
    benchmark::DoNotOptimize(automaton.state_count());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BuildMatcher)->Arg(10)->Arg(25)->Arg(50)->Arg(100)->Complexity();

static void ScanThroughput(benchmark::State& state) {
  RewriteSystem system = test::scaling_family(100);
  MatchAutomaton automaton(system);
  std::mt19937 rng(3);
  Word text = test::random_word(system.alphabet(), rng, 4096);
  for (auto _ : state) {
    benchmark::DoNotOptimize(automaton.scan(MatchAutomaton::kRoot, text));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(ScanThroughput);

static void ReachabilityAnalysis(benchmark::State& state) {
  RewriteSystem system = test::scaling_family(static_cast<std::size_t>(state.range(0)));
  MatchAutomaton automaton(system);
  for (auto _ : state) {
    benchmark::DoNotOptimize(irreducible_reachable_states(automaton).witness.size());
  }
}
BENCHMARK(ReachabilityAnalysis)->Arg(10)->Arg(100);

BENCHMARK_MAIN();
