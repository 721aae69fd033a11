#include "strew/matcher.hpp"

#include <algorithm>
#include <deque>

namespace strew {

MatchAutomaton::MatchAutomaton(const RewriteSystem& system)
    : alphabet_(system.alphabet()) {
  const std::size_t k = alphabet_.size();
  lhs_.reserve(system.rules().size());
  for (const Rule& rule : system.rules())
    lhs_.push_back(rule.lhs);

  // Trie over the left-hand sides; duplicate lhs share a node.
  struct Node {
    std::vector<State> child;
    std::vector<std::size_t> rules; // rules whose lhs ends here
    State fail = kRoot;
    std::size_t depth = 0;
  };
  std::vector<Node> nodes;
  nodes.push_back({std::vector<State>(k, -1), {}, kRoot, 0});
  for (std::size_t r = 0; r < lhs_.size(); ++r) {
    State s = kRoot;
    for (char c : lhs_[r]) {
      int rank = alphabet_.rank(c);
      if (nodes[static_cast<std::size_t>(s)].child[static_cast<std::size_t>(rank)] < 0) {
        nodes[static_cast<std::size_t>(s)].child[static_cast<std::size_t>(rank)] =
            static_cast<State>(nodes.size());
        nodes.push_back({std::vector<State>(k, -1), {},
                         kRoot, nodes[static_cast<std::size_t>(s)].depth + 1});
      }
      s = nodes[static_cast<std::size_t>(s)].child[static_cast<std::size_t>(rank)];
    }
    nodes[static_cast<std::size_t>(s)].rules.push_back(r);
  }

  // Breadth-first failure links, then precompose them into a total table.
  goto_table_.assign(nodes.size() * k, kRoot);
  std::deque<State> queue;
  for (std::size_t c = 0; c < k; ++c) {
    State child = nodes[0].child[c];
    if (child >= 0) {
      nodes[static_cast<std::size_t>(child)].fail = kRoot;
      goto_table_[c] = child;
      queue.push_back(child);
    }
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < k; ++c) {
      State child = nodes[static_cast<std::size_t>(s)].child[c];
      State via_fail =
          goto_table_[static_cast<std::size_t>(nodes[static_cast<std::size_t>(s)].fail) * k + c];
      if (child >= 0) {
        nodes[static_cast<std::size_t>(child)].fail = via_fail;
        goto_table_[static_cast<std::size_t>(s) * k + c] = child;
        queue.push_back(child);
      } else {
        goto_table_[static_cast<std::size_t>(s) * k + c] = via_fail;
      }
    }
  }

  // Materialize the match lists through the suffix-link chains. Nodes come
  // in BFS-compatible index order only for the root, so walk chains
  // directly; chain length is bounded by pattern length.
  longest_.assign(nodes.size(), -1);
  match_lists_.resize(nodes.size());
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    std::vector<std::size_t>& list = match_lists_[s];
    for (State t = static_cast<State>(s); t != kRoot;
         t = nodes[static_cast<std::size_t>(t)].fail) {
      for (std::size_t r : nodes[static_cast<std::size_t>(t)].rules)
        list.push_back(r);
    }
    std::stable_sort(list.begin(), list.end(), [this](std::size_t a, std::size_t b) {
      if (lhs_[a].size() != lhs_[b].size())
        return lhs_[a].size() > lhs_[b].size();
      return a < b;
    });
    if (!list.empty())
      longest_[s] = static_cast<std::int32_t>(list.front());
  }
}

MatchAutomaton build_matcher(const RewriteSystem& system) {
  return MatchAutomaton(system);
}

std::pair<MatchAutomaton::State, std::optional<std::size_t>> advance(
    const MatchAutomaton& automaton, MatchAutomaton::State s, char c) {
  MatchAutomaton::State next = automaton.go(s, c);
  return {next, automaton.longest_match(next)};
}

ReachabilityInfo irreducible_reachable_states(const MatchAutomaton& automaton) {
  ReachabilityInfo info;
  info.witness.resize(automaton.state_count());
  std::deque<MatchAutomaton::State> queue;
  info.witness[MatchAutomaton::kRoot] = Word();
  queue.push_back(MatchAutomaton::kRoot);
  const Alphabet& alphabet = automaton.alphabet();
  while (!queue.empty()) {
    MatchAutomaton::State s = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < alphabet.size(); ++c) {
      char symbol = alphabet.symbol(c);
      MatchAutomaton::State next = automaton.go(s, symbol);
      if (automaton.has_match(next))
        continue;
      auto& slot = info.witness[static_cast<std::size_t>(next)];
      if (slot.has_value())
        continue;
      slot = *info.witness[static_cast<std::size_t>(s)] + symbol;
      queue.push_back(next);
    }
  }
  return info;
}

} // namespace strew
