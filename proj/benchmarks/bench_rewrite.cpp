#include <benchmark/benchmark.h>

#include <random>

#include "strew/rewrite.hpp"
#include "testsupport.hpp"

using namespace strew;

static void NormalizeRandomWords(benchmark::State& state) {
  RewriteSystem system = test::make_system(
      "abcde",
      {{"ac", "a"}, {"ad", "b"}, {"ae", "a"}, {"bc", "b"}, {"bd", "a"}, {"be", "b"}});
  std::mt19937 rng(1);
  std::vector<Word> words;
  for (int i = 0; i < 256; ++i)
    words.push_back(test::random_word(system.alphabet(), rng,
                                      static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(system, words[i++ & 255]));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(NormalizeRandomWords)->RangeMultiplier(2)->Range(8, 256)->Complexity();

static void LeftmostRedexScan(benchmark::State& state) {
  RewriteSystem system = test::make_system("abcd", {{"ab", "c"}, {"cd", "a"}});
  std::mt19937 rng(2);
  Word w = test::random_word(system.alphabet(), rng,
                             static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(leftmost_innermost_redex(system, w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(LeftmostRedexScan)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

BENCHMARK_MAIN();
