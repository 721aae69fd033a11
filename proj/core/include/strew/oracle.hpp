#pragma once

#include <optional>
#include <set>
#include <utility>

#include "strew/system.hpp"

namespace strew {

// Bounds for the brute-force searches. max_word_length limits candidate
// words; max_rewrite_steps limits every internal reduction.
struct SearchBudget {
  std::size_t max_word_length = 6;
  std::size_t max_rewrite_steps = 100000;
};

// Outcome of a bounded search. Exhausted means the step budget truncated
// the search somewhere; it is never conflated with a definite "none within
// the bound".
enum class SearchStatus { Found, NoneWithinBound, Exhausted };

template <typename T>
struct SearchResult {
  SearchStatus status = SearchStatus::NoneWithinBound;
  std::optional<T> value;

  bool found() const { return status == SearchStatus::Found; }
};

// All irreducible descendants of w reachable by exploring every redex
// position and every applicable rule. complete is false when the budget
// cut the exploration short.
struct NormalFormSet {
  std::set<Word> forms;
  bool complete = true;
};

NormalFormSet all_normal_forms(const RewriteSystem& system, const Word& w,
                               const SearchBudget& budget);

// Shortest non-empty w with |w| <= max_word_length and nf(u.w) = v, in
// short-lex enumeration order.
SearchResult<Word> brute_force_cap(const RewriteSystem& system, const Word& u,
                                   const Word& v, const SearchBudget& budget);

// Some pair (x irreducible, y non-empty) with |x|, |y| <= max_word_length
// and nf(x.y) = x, smallest combined length first.
SearchResult<std::pair<Word, Word>> brute_force_collapse(const RewriteSystem& system,
                                                         const SearchBudget& budget);

} // namespace strew
