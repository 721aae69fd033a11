#include <benchmark/benchmark.h>

#include "strew/decide.hpp"
#include "testsupport.hpp"

using namespace strew;

namespace {

Evidence family_evidence(const RewriteSystem& system) {
  Evidence ev = Evidence::from_system(system);
  ev.confluence = Provenance::Verified;
  ev.forward_closure = Provenance::Verified;
  return ev;
}

} // namespace

// The full subterm-collapse decision over the generated forward-closed
// family: one machine, grammar, and emptiness fixpoint per distinct rhs.
static void SubtermCollapseDecision(benchmark::State& state) {
  RewriteSystem system = test::scaling_family(static_cast<std::size_t>(state.range(0)));
  Evidence evidence = family_evidence(system);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_subterm_collapsing(system, evidence).collapsing);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SubtermCollapseDecision)->Arg(10)->Arg(20)->Arg(50)->Arg(100)
    ->Unit(benchmark::kMillisecond)->Complexity();

// A single cap query against the largest family.
static void CapQuery(benchmark::State& state) {
  RewriteSystem system = test::scaling_family(100);
  Evidence evidence = family_evidence(system);
  for (auto _ : state) {
    CapResult result = solve_cap(system, "hh", "hi", evidence);
    benchmark::DoNotOptimize(result.derivable);
  }
}
BENCHMARK(CapQuery)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
