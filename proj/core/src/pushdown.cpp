#include "strew/pushdown.hpp"

#include <algorithm>

#include "strew/analysis.hpp"
#include "strew/rewrite.hpp"

namespace strew {

CollapsePda::CollapsePda(RewriteSystem system, std::shared_ptr<const MatchAutomaton> matcher,
                         Word u, Word v)
    : system_(std::move(system)),
      matcher_(std::move(matcher)),
      u_(std::move(u)),
      v_(std::move(v)) {
  initial_stack_.push_back({kBottomMarker, MatchAutomaton::kRoot});
  MatchAutomaton::State state = MatchAutomaton::kRoot;
  for (char c : u_) {
    state = matcher_->go(state, c);
    initial_stack_.push_back({c, state});
  }
}

std::string CollapsePda::render_stack(const std::vector<StackCell>& stack) {
  std::string out;
  out.reserve(stack.size());
  for (const StackCell& cell : stack)
    out.push_back(cell.symbol);
  return out;
}

CollapsePda build_collapse_pda(const RewriteSystem& system, const Word& u, const Word& v) {
  return build_collapse_pda(system, u, v, Evidence::from_system(system));
}

CollapsePda build_collapse_pda(const RewriteSystem& system, const Word& u, const Word& v,
                               const Evidence& evidence,
                               std::shared_ptr<const MatchAutomaton> matcher) {
  if (system.alphabet().contains(CollapsePda::kBottomMarker) ||
      system.alphabet().contains(CollapsePda::kEndMarker))
    throw InputError("alphabet must not contain the reserved markers '$' and '#'");
  system.alphabet().require_word(u, "build_collapse_pda u");
  system.alphabet().require_word(v, "build_collapse_pda v");
  if (!evidence.has_convergence() || !evidence.has_forward_closure())
    throw PreconditionError(
        "build_collapse_pda requires convergence and forward-closure evidence");
  if (!system.right_reduced())
    throw PreconditionError("build_collapse_pda requires a right-reduced system");
  if (!duplicate_lhs(system).empty())
    throw PreconditionError(
        "build_collapse_pda: two rules share a left-hand side, so the machine would not "
        "be deterministic; such a system cannot be convergent and forward-closed");
  if (!is_irreducible(system, u))
    throw PreconditionError("build_collapse_pda: u must be irreducible");
  if (!is_irreducible(system, v))
    throw PreconditionError("build_collapse_pda: v must be irreducible");
  if (!matcher)
    matcher = std::make_shared<MatchAutomaton>(system);
  return CollapsePda(system, std::move(matcher), u, v);
}

RunTrace run_pda(const CollapsePda& pda, const Word& input) {
  if (input.empty() || input.back() != CollapsePda::kEndMarker)
    throw InputError("run_pda: input must end with the end marker '#'");
  for (std::size_t i = 0; i + 1 < input.size(); ++i) {
    if (input[i] == CollapsePda::kEndMarker)
      throw InputError("run_pda: end marker '#' may only appear once, at the end");
    if (!pda.system().alphabet().contains(input[i]))
      throw InputError(std::string("run_pda: symbol '") + input[i] +
                       "' is not in the alphabet");
  }

  const MatchAutomaton& matcher = pda.matcher();
  const auto& rules = pda.system().rules();
  std::vector<StackCell> stack = pda.initial_stack();
  RunTrace trace;

  for (std::size_t i = 0; i + 1 < input.size(); ++i) {
    char a = input[i];
    auto [next_state, match] = advance(matcher, stack.back().matcher_state, a);
    if (!match) {
      stack.push_back({a, next_state});
    } else {
      // The longest lhs suffix of stack.a is the l-part; replace it by the
      // unique rule's rhs. All but the last of its symbols sit on the stack.
      const Rule& rule = rules[*match];
      stack.resize(stack.size() - (rule.lhs.size() - 1));
      for (char c : rule.rhs) {
        auto [state, m] = advance(matcher, stack.back().matcher_state, c);
        if (m)
          throw PreconditionError(
              "run_pda: pushing a right-hand side completed a redex; the system is not "
              "forward-closed as claimed");
        stack.push_back({c, state});
      }
    }
    trace.steps.push_back({a, CollapsePda::render_stack(stack)});
  }

  bool stack_is_v = stack.size() == pda.v().size() + 1 &&
                    std::equal(pda.v().begin(), pda.v().end(), stack.begin() + 1,
                               [](char c, const StackCell& cell) { return c == cell.symbol; });
  trace.accepted = stack_is_v && input.size() > 1;
  trace.steps.push_back({CollapsePda::kEndMarker, CollapsePda::render_stack(stack)});
  return trace;
}

LanguageDecision decide_language(const CollapsePda& pda) {
  Grammar grammar = pda_to_grammar(pda);
  LanguageDecision decision;
  decision.empty = grammar.language_empty();
  if (!decision.empty) {
    Word with_marker = *grammar.min_word();
    if (with_marker.empty() || with_marker.back() != CollapsePda::kEndMarker)
      throw Error("decide_language: internal error: witness lacks the end marker");
    RunTrace check = run_pda(pda, with_marker);
    if (!check.accepted)
      throw Error("decide_language: internal error: grammar witness rejected by the machine");
    with_marker.pop_back();
    decision.witness = std::move(with_marker);
  }
  return decision;
}

LanguageDecision decide_language(const RewriteSystem& system, const Word& u, const Word& v) {
  return decide_language(build_collapse_pda(system, u, v));
}

LanguageDecision decide_language(const RewriteSystem& system, const Word& u, const Word& v,
                                 const Evidence& evidence) {
  return decide_language(build_collapse_pda(system, u, v, evidence));
}

} // namespace strew
