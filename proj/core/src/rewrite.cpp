#include "strew/rewrite.hpp"

#include <cassert>
#include <limits>

namespace strew {

namespace {

// Longest lhs that is a suffix of w ending at position end (exclusive).
// Returns the rule index a leftmost-largest step would use there: among
// rules sharing that lhs, the one with the short-lex-least rhs.
std::optional<std::size_t> longest_lhs_suffix_at(const RewriteSystem& system,
                                                 const Word& w, std::size_t end) {
  const auto& rules = system.rules();
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& lhs = rules[i].lhs;
    if (lhs.size() > end)
      continue;
    if (w.compare(end - lhs.size(), lhs.size(), lhs) != 0)
      continue;
    if (!best) {
      best = i;
      continue;
    }
    const Word& best_lhs = rules[*best].lhs;
    if (lhs.size() > best_lhs.size()) {
      best = i;
    } else if (lhs.size() == best_lhs.size()) {
      // Equal-length suffixes at the same endpoint are the same string, so
      // this is a second rule for the same lhs: pick the least rhs.
      if (compare_shortlex(rules[i].rhs, rules[*best].rhs, system.alphabet()) ==
          Ordering::Less)
        best = i;
    }
  }
  return best;
}

void require_termination(const RewriteSystem& system, const Evidence& evidence) {
  if (!evidence.has_termination())
    throw PreconditionError(
        "normalization requires termination evidence: no short-lex certificate and no "
        "'terminating' assumption");
  (void)system;
}

// Normalizes by scanning left to right over an explicit buffer. A
// leftmost-largest step only ever rewrites a suffix of the already-scanned
// prefix, so feeding symbols one at a time and reducing the buffer suffix
// reproduces the strategy exactly; replaced right-hand sides are re-fed the
// same way. Returns nullopt when the step budget runs out.
std::optional<Word> reduce_scan(const RewriteSystem& system, const Word& w,
                                std::size_t max_steps) {
  struct Feed {
    Word text;
    std::size_t index = 0;
  };
  Word buffer;
  buffer.reserve(w.size());
  std::vector<Feed> feed;
  feed.push_back({w, 0});
  std::size_t steps = 0;

  while (!feed.empty()) {
    Feed& top = feed.back();
    if (top.index == top.text.size()) {
      feed.pop_back();
      continue;
    }
    buffer.push_back(top.text[top.index]);
    ++top.index;
    if (auto rule = longest_lhs_suffix_at(system, buffer, buffer.size())) {
      if (steps++ == max_steps)
        return std::nullopt;
      const Rule& r = system.rules()[*rule];
      buffer.resize(buffer.size() - r.lhs.size());
      if (!r.rhs.empty())
        feed.push_back({r.rhs, 0});
    }
  }
  return buffer;
}

} // namespace

bool is_irreducible(const RewriteSystem& system, const Word& w) {
  for (const Rule& rule : system.rules()) {
    if (w.find(rule.lhs) != Word::npos)
      return false;
  }
  return true;
}

std::optional<RedexSplit> leftmost_innermost_redex(const RewriteSystem& system,
                                                   const Word& w) {
  system.alphabet().require_word(w, "leftmost_innermost_redex");
  for (std::size_t end = 1; end <= w.size(); ++end) {
    if (auto rule = longest_lhs_suffix_at(system, w, end)) {
      const Word& lhs = system.rules()[*rule].lhs;
      RedexSplit split;
      split.s_part = w.substr(0, end - lhs.size());
      split.l_part = lhs;
      split.rule_index = *rule;
      split.end_position = end;
      return split;
    }
  }
  return std::nullopt;
}

std::optional<Word> ll_step(const RewriteSystem& system, const Word& w) {
  auto split = leftmost_innermost_redex(system, w);
  if (!split)
    return std::nullopt;
  const Rule& rule = system.rules()[split->rule_index];
  Word result = split->s_part;
  result += rule.rhs;
  result.append(w, split->end_position, Word::npos);
  return result;
}

Word normalize(const RewriteSystem& system, const Word& w) {
  return normalize(system, w, Evidence::from_system(system));
}

Word normalize(const RewriteSystem& system, const Word& w, const Evidence& evidence) {
  require_termination(system, evidence);
  system.alphabet().require_word(w, "normalize");
  auto result = reduce_scan(system, w, std::numeric_limits<std::size_t>::max());
  assert(result.has_value());
  return *result;
}

std::optional<Word> normalize_bounded(const RewriteSystem& system, const Word& w,
                                      std::size_t max_steps) {
  system.alphabet().require_word(w, "normalize_bounded");
  return reduce_scan(system, w, max_steps);
}

std::vector<DecompositionStep> decompose_normalization(const RewriteSystem& system,
                                                       const Word& x, const Word& y) {
  return decompose_normalization(system, x, y, Evidence::from_system(system));
}

std::vector<DecompositionStep> decompose_normalization(const RewriteSystem& system,
                                                       const Word& x, const Word& y,
                                                       const Evidence& evidence) {
  require_termination(system, evidence);
  if (!evidence.has_convergence() || !evidence.has_forward_closure())
    throw PreconditionError(
        "decompose_normalization requires convergence and forward-closure evidence");
  if (!system.right_reduced())
    throw PreconditionError("decompose_normalization requires a right-reduced system");
  if (!is_irreducible(system, x))
    throw PreconditionError("decompose_normalization: x is reducible");

  std::vector<DecompositionStep> steps;
  Word current_x = x;
  Word rest = y;
  for (;;) {
    Word whole = current_x + rest;
    auto split = leftmost_innermost_redex(system, whole);
    if (!split) {
      steps.push_back({current_x, rest});
      return steps;
    }
    // x_i and the rest are irreducible, so the redex crosses the boundary.
    if (split->end_position <= current_x.size())
      throw PreconditionError(
          "decompose_normalization: intermediate word became reducible; forward-closure "
          "assumption violated");
    Word yi = rest.substr(0, split->end_position - current_x.size());
    // Every emitted piece of y must be irreducible; a reducible piece means
    // y itself was too reducible for the staged decomposition to exist.
    if (!is_irreducible(system, yi))
      throw PreconditionError("decompose_normalization: y is reducible");
    const Rule& rule = system.rules()[split->rule_index];
    Word next_x = split->s_part + rule.rhs;
    if (!is_irreducible(system, next_x))
      throw PreconditionError(
          "decompose_normalization: one-step reduct is reducible; forward-closure "
          "assumption violated");
    steps.push_back({current_x, yi});
    current_x = std::move(next_x);
    rest.erase(0, yi.size());
  }
}

} // namespace strew
