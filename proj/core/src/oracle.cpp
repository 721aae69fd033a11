#include "strew/oracle.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "strew/rewrite.hpp"

namespace strew {

namespace {

// Every one-step reduct of w: all redex positions, all applicable rules.
std::vector<Word> one_step_reducts(const RewriteSystem& system, const Word& w) {
  std::vector<Word> reducts;
  for (const Rule& rule : system.rules()) {
    for (std::size_t pos = w.find(rule.lhs); pos != Word::npos;
         pos = w.find(rule.lhs, pos + 1)) {
      Word next = w.substr(0, pos);
      next += rule.rhs;
      next.append(w, pos + rule.lhs.size(), Word::npos);
      reducts.push_back(std::move(next));
    }
  }
  return reducts;
}

// Breadth-first search over the normal forms of u.w for growing w. Since
// leftmost-largest steps of a word x.a that end inside x coincide with the
// steps of x alone, nf(u.wa) = nf(nf(u.w).a); prefixes sharing a normal
// form therefore have identical futures and are explored once.
SearchResult<Word> cap_search(const RewriteSystem& system, const Word& u, const Word& v,
                              const SearchBudget& budget) {
  SearchResult<Word> result;
  auto start = normalize_bounded(system, u, budget.max_rewrite_steps);
  if (!start) {
    result.status = SearchStatus::Exhausted;
    return result;
  }
  struct Item {
    Word state;
    Word prefix;
  };
  std::deque<Item> queue;
  std::unordered_set<Word> seen;
  seen.insert(*start);
  queue.push_back({*start, Word()});
  const Alphabet& alphabet = system.alphabet();
  bool exhausted = false;
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    if (item.prefix.size() == budget.max_word_length)
      continue;
    for (std::size_t c = 0; c < alphabet.size(); ++c) {
      Word extended = item.state + alphabet.symbol(c);
      auto reduced = normalize_bounded(system, extended, budget.max_rewrite_steps);
      if (!reduced) {
        exhausted = true;
        continue;
      }
      Word w = item.prefix + alphabet.symbol(c);
      if (*reduced == v) {
        result.status = SearchStatus::Found;
        result.value = std::move(w);
        return result;
      }
      if (seen.insert(*reduced).second)
        queue.push_back({std::move(*reduced), std::move(w)});
    }
  }
  result.status = exhausted ? SearchStatus::Exhausted : SearchStatus::NoneWithinBound;
  return result;
}

} // namespace

NormalFormSet all_normal_forms(const RewriteSystem& system, const Word& w,
                               const SearchBudget& budget) {
  system.alphabet().require_word(w, "all_normal_forms");
  NormalFormSet result;
  std::unordered_set<Word> visited;
  std::deque<Word> queue;
  visited.insert(w);
  queue.push_back(w);
  std::size_t expansions = 0;
  while (!queue.empty()) {
    Word current = std::move(queue.front());
    queue.pop_front();
    std::vector<Word> reducts = one_step_reducts(system, current);
    if (reducts.empty()) {
      result.forms.insert(std::move(current));
      continue;
    }
    if (expansions++ >= budget.max_rewrite_steps) {
      result.complete = false;
      continue;
    }
    for (Word& next : reducts) {
      if (next.size() > std::max(w.size(), budget.max_word_length)) {
        // Growing rules could run away; give up on exhaustiveness instead.
        result.complete = false;
        continue;
      }
      if (visited.insert(next).second)
        queue.push_back(std::move(next));
    }
  }
  return result;
}

SearchResult<Word> brute_force_cap(const RewriteSystem& system, const Word& u,
                                   const Word& v, const SearchBudget& budget) {
  system.alphabet().require_word(u, "brute_force_cap");
  system.alphabet().require_word(v, "brute_force_cap");
  return cap_search(system, u, v, budget);
}

SearchResult<std::pair<Word, Word>> brute_force_collapse(const RewriteSystem& system,
                                                         const SearchBudget& budget) {
  SearchResult<std::pair<Word, Word>> result;
  const Alphabet& alphabet = system.alphabet();
  bool exhausted = false;

  // Irreducible candidates x in short-lex order; for each, the shortest
  // collapsing y via the same search as brute_force_cap, capped so only
  // improvements over the best combined length are explored.
  std::optional<std::pair<Word, Word>> best;
  std::deque<Word> frontier;
  frontier.push_back(Word());
  while (!frontier.empty()) {
    Word x = std::move(frontier.front());
    frontier.pop_front();
    if (!x.empty()) {
      std::size_t cap = budget.max_word_length;
      if (best) {
        std::size_t best_combined = best->first.size() + best->second.size();
        cap = best_combined > x.size() + 1 ? std::min(cap, best_combined - x.size() - 1)
                                           : 0;
      }
      if (cap >= 1) {
        SearchBudget sub{cap, budget.max_rewrite_steps};
        SearchResult<Word> found = cap_search(system, x, x, sub);
        if (found.status == SearchStatus::Exhausted)
          exhausted = true;
        if (found.found()) {
          if (!best ||
              x.size() + found.value->size() < best->first.size() + best->second.size())
            best = {x, *found.value};
        }
      }
    }
    if (x.size() < budget.max_word_length &&
        (!best || x.size() + 2 <= best->first.size() + best->second.size())) {
      for (std::size_t c = 0; c < alphabet.size(); ++c) {
        Word next = x + alphabet.symbol(c);
        if (is_irreducible(system, next))
          frontier.push_back(std::move(next));
      }
    }
  }
  if (best) {
    result.status = SearchStatus::Found;
    result.value = std::move(best);
  } else {
    result.status = exhausted ? SearchStatus::Exhausted : SearchStatus::NoneWithinBound;
  }
  return result;
}

} // namespace strew
