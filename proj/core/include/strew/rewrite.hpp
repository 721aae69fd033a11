#pragma once

#include <optional>
#include <vector>

#include "strew/system.hpp"

namespace strew {

// An innermost redex factored at the end of the shortest reducible prefix:
// s_part . l_part is that prefix, l_part is the longest lhs suffix of it,
// and rule_index selects the rule a leftmost-largest step would apply.
// end_position is the index one past the prefix in the scanned word.
struct RedexSplit {
  Word s_part;
  Word l_part;
  std::size_t rule_index = 0;
  std::size_t end_position = 0;
};

// One stage of the normalization decomposition of x.y: both parts are
// irreducible for the system the decomposition was computed against.
struct DecompositionStep {
  Word xi;
  Word yi;

  bool operator==(const DecompositionStep& other) const = default;
};

// True iff no lhs of the system occurs as a substring of w.
bool is_irreducible(const RewriteSystem& system, const Word& w);

// Splits the shortest reducible prefix of w, or nothing if w is irreducible.
std::optional<RedexSplit> leftmost_innermost_redex(const RewriteSystem& system,
                                                   const Word& w);

// One leftmost-largest rewrite step: reduce at the leftmost innermost
// redex, l-part the longest lhs suffix, and among rules sharing that lhs
// the short-lex-least rhs. Nothing iff w is irreducible.
std::optional<Word> ll_step(const RewriteSystem& system, const Word& w);

// The unique leftmost-largest normal form. Requires termination evidence
// (short-lex certificate or a declared/passed assumption); throws
// PreconditionError without it.
Word normalize(const RewriteSystem& system, const Word& w);
Word normalize(const RewriteSystem& system, const Word& w, const Evidence& evidence);

// Same strategy with a hard step budget instead of evidence; nullopt when
// the budget runs out before a normal form is reached.
std::optional<Word> normalize_bounded(const RewriteSystem& system, const Word& w,
                                      std::size_t max_steps);

// The staged decomposition of normalizing x.y for irreducible x and y over
// a convergent, forward-closed, right-reduced system: returns pairs
// (x_1,y_1)..(x_{n+1},y_{n+1}) where the y_i partition y, each x_i y_i with
// i <= n is an innermost redex rewriting in one step to x_{i+1}, and the
// final pair concatenates to the normal form of x.y.
std::vector<DecompositionStep> decompose_normalization(const RewriteSystem& system,
                                                       const Word& x, const Word& y);
std::vector<DecompositionStep> decompose_normalization(const RewriteSystem& system,
                                                       const Word& x, const Word& y,
                                                       const Evidence& evidence);

} // namespace strew
