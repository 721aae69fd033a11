#include <doctest.h>

#include <random>

#include "strew/matcher.hpp"
#include "strew/rewrite.hpp"
#include "testsupport.hpp"

using namespace strew;
using test::make_system;

TEST_CASE("matcher construction for {ab, db}") {
  RewriteSystem r = make_system("abcd", {{"ab", "c"}, {"db", "ac"}});
  MatchAutomaton automaton(r);
  CHECK(automaton.state_count() == 5);  // root, a, d, ab, db

  auto end = automaton.scan(MatchAutomaton::kRoot, "aab");
  CHECK(automaton.longest_match(end) == std::size_t{0});

  RewriteSystem empty = make_system("ab", {});
  MatchAutomaton trivial(empty);
  CHECK(trivial.state_count() == 1);
  CHECK_FALSE(trivial.has_match(MatchAutomaton::kRoot));
}

TEST_CASE("single-symbol advance") {
  RewriteSystem r = make_system("abcd", {{"ab", "c"}, {"db", "ac"}});
  MatchAutomaton automaton(r);
  auto [s_a, none] = advance(automaton, MatchAutomaton::kRoot, 'a');
  CHECK_FALSE(none.has_value());
  auto [s_ab, match] = advance(automaton, s_a, 'b');
  CHECK(match == std::size_t{0});
  // No trie edge for 'c' from the match state: failure leads to the root.
  auto [s_back, no_match] = advance(automaton, s_ab, 'c');
  CHECK(s_back == MatchAutomaton::kRoot);
  CHECK_FALSE(no_match.has_value());
}

TEST_CASE("matcher scan agrees with the naive irreducibility scan") {
  for (const auto& entry : test::curated_suite()) {
    MatchAutomaton automaton(entry.system);
    test::for_each_word(entry.system.alphabet(), 6, [&](const Word& w) {
      bool match_free = true;
      MatchAutomaton::State s = MatchAutomaton::kRoot;
      for (char c : w) {
        s = automaton.go(s, c);
        if (automaton.has_match(s))
          match_free = false;
      }
      CHECK(match_free == is_irreducible(entry.system, w));
      return true;
    });
  }
}

TEST_CASE("longest match equals the longest lhs suffix, all matches are the suffix set") {
  std::mt19937 rng(23);
  for (const auto& entry : test::curated_suite()) {
    MatchAutomaton automaton(entry.system);
    const auto& rules = entry.system.rules();
    for (int i = 0; i < 200; ++i) {
      Word w = test::random_word(entry.system.alphabet(), rng, i % 7);
      auto state = automaton.scan(MatchAutomaton::kRoot, w);

      std::vector<std::size_t> expected;
      for (std::size_t r = 0; r < rules.size(); ++r) {
        const Word& lhs = rules[r].lhs;
        if (lhs.size() <= w.size() &&
            w.compare(w.size() - lhs.size(), lhs.size(), lhs) == 0)
          expected.push_back(r);
      }
      std::sort(expected.begin(), expected.end(), [&](std::size_t a, std::size_t b) {
        if (rules[a].lhs.size() != rules[b].lhs.size())
          return rules[a].lhs.size() > rules[b].lhs.size();
        return a < b;
      });
      CHECK(automaton.all_matches(state) == expected);
      if (expected.empty())
        CHECK_FALSE(automaton.longest_match(state).has_value());
      else
        CHECK(automaton.longest_match(state) == expected.front());
    }
  }
}

TEST_CASE("irreducible-reachable states for the documented systems") {
  RewriteSystem idem = make_system("ab", {{"aa", "a"}});
  MatchAutomaton a1(idem);
  ReachabilityInfo r1 = irreducible_reachable_states(a1);
  std::size_t reachable = 0;
  for (const auto& w : r1.witness)
    reachable += w.has_value() ? 1 : 0;
  CHECK(reachable == 2);  // root and "a"
  CHECK(r1.witness[MatchAutomaton::kRoot] == Word(""));
  CHECK(r1.witness[a1.scan(MatchAutomaton::kRoot, "a")] == Word("a"));

  RewriteSystem ab = make_system("abc", {{"ab", "c"}});
  MatchAutomaton a2(ab);
  ReachabilityInfo r2 = irreducible_reachable_states(a2);
  CHECK(r2.witness[a2.scan(MatchAutomaton::kRoot, "a")] == Word("a"));

  RewriteSystem empty = make_system("ab", {});
  MatchAutomaton a3(empty);
  ReachabilityInfo r3 = irreducible_reachable_states(a3);
  CHECK(r3.witness[MatchAutomaton::kRoot] == Word(""));
}

TEST_CASE("reachability witnesses are irreducible, match-free, and shortest") {
  for (const auto& entry : test::curated_suite()) {
    MatchAutomaton automaton(entry.system);
    ReachabilityInfo info = irreducible_reachable_states(automaton);

    // Shortest word reaching each state without a match, by enumeration.
    std::vector<std::optional<Word>> expected(automaton.state_count());
    test::for_each_word(entry.system.alphabet(), 6, [&](const Word& w) {
      if (!is_irreducible(entry.system, w))
        return true;
      auto state = automaton.scan(MatchAutomaton::kRoot, w);
      if (!expected[static_cast<std::size_t>(state)].has_value())
        expected[static_cast<std::size_t>(state)] = w;
      return true;
    });
    for (std::size_t s = 0; s < automaton.state_count(); ++s) {
      if (!info.witness[s].has_value())
        continue;
      CHECK(is_irreducible(entry.system, *info.witness[s]));
      if (info.witness[s]->size() <= 6) {
        REQUIRE(expected[s].has_value());
        CHECK(expected[s]->size() == info.witness[s]->size());
      }
    }
  }
}
