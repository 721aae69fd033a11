#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strew/system.hpp"

namespace strew {

// Aho-Corasick automaton over the left-hand sides of a system, with
// failure transitions precomposed into a total goto table (DFA form).
// Scanning any word from the root ends in a state whose matches are
// exactly the left-hand sides that are suffixes of the word.
class MatchAutomaton {
public:
  using State = std::int32_t;
  static constexpr State kRoot = 0;

  explicit MatchAutomaton(const RewriteSystem& system);

  std::size_t state_count() const { return match_lists_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t rule_count() const { return lhs_.size(); }
  const Word& lhs(std::size_t rule) const { return lhs_[rule]; }

  State go(State s, char c) const {
    return goto_table_[static_cast<std::size_t>(s) * alphabet_.size() +
                       static_cast<std::size_t>(alphabet_.rank(c))];
  }

  // Rule index of the longest lhs that is a suffix of the scanned word.
  std::optional<std::size_t> longest_match(State s) const {
    std::int32_t m = longest_[static_cast<std::size_t>(s)];
    return m < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(m));
  }

  bool has_match(State s) const { return longest_[static_cast<std::size_t>(s)] >= 0; }

  // Every rule whose lhs is a suffix of the scanned word, longest first;
  // rules sharing an lhs appear in listing order.
  const std::vector<std::size_t>& all_matches(State s) const {
    return match_lists_[static_cast<std::size_t>(s)];
  }

  State scan(State s, const Word& w) const {
    for (char c : w)
      s = go(s, c);
    return s;
  }

private:
  Alphabet alphabet_;
  std::vector<Word> lhs_;
  std::vector<State> goto_table_;                     // states x alphabet
  std::vector<std::int32_t> longest_;                 // -1 = no match
  std::vector<std::vector<std::size_t>> match_lists_; // per state
};

// Construction named as the operation consumers use.
MatchAutomaton build_matcher(const RewriteSystem& system);

// Single-symbol step: the successor state and its longest match.
std::pair<MatchAutomaton::State, std::optional<std::size_t>> advance(
    const MatchAutomaton& automaton, MatchAutomaton::State s, char c);

// States reachable from the root along match-free paths, i.e. states some
// irreducible word can reach, each with a shortest such witness (ties
// broken toward the precedence-least symbol).
struct ReachabilityInfo {
  // Indexed by state; disengaged entries are unreachable without a match.
  std::vector<std::optional<Word>> witness;

  bool reachable(MatchAutomaton::State s) const {
    return witness[static_cast<std::size_t>(s)].has_value();
  }
};

ReachabilityInfo irreducible_reachable_states(const MatchAutomaton& automaton);

} // namespace strew
