#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "strew/matcher.hpp"
#include "strew/system.hpp"

namespace strew {

// One stack cell of the collapse machine: an alphabet symbol together with
// the matcher state reached by scanning the stack content from the bottom
// marker up to and including this cell.
struct StackCell {
  char symbol;
  MatchAutomaton::State matcher_state;
};

// The deterministic pushdown machine for L(u,v) = { w# | u.w normalizes to
// v, w != lambda } over a convergent, right-reduced, forward-closed system.
// Pushing a symbol either extends the stack (no redex completed) or
// replaces the l-part of the completed innermost redex by the rule's rhs.
class CollapsePda {
public:
  static constexpr char kBottomMarker = '$';
  static constexpr char kEndMarker = '#';

  const RewriteSystem& system() const { return system_; }
  const MatchAutomaton& matcher() const { return *matcher_; }
  const Word& u() const { return u_; }
  const Word& v() const { return v_; }
  const std::vector<StackCell>& initial_stack() const { return initial_stack_; }

  // Stack rendered bottom-to-top, bottom marker included.
  static std::string render_stack(const std::vector<StackCell>& stack);

private:
  friend CollapsePda build_collapse_pda(const RewriteSystem&, const Word&, const Word&,
                                        const Evidence&,
                                        std::shared_ptr<const MatchAutomaton>);
  CollapsePda(RewriteSystem system, std::shared_ptr<const MatchAutomaton> matcher,
              Word u, Word v);

  RewriteSystem system_;
  std::shared_ptr<const MatchAutomaton> matcher_;
  Word u_;
  Word v_;
  std::vector<StackCell> initial_stack_;
};

CollapsePda build_collapse_pda(const RewriteSystem& system, const Word& u, const Word& v);
CollapsePda build_collapse_pda(const RewriteSystem& system, const Word& u, const Word& v,
                               const Evidence& evidence,
                               std::shared_ptr<const MatchAutomaton> matcher = nullptr);

// A deterministic run: one entry per consumed input symbol with the stack
// after the step. Every recorded stack word below the marker is
// irreducible.
struct RunTrace {
  struct Step {
    char input;
    std::string stack;  // rendered, bottom marker included
  };
  std::vector<Step> steps;
  bool accepted = false;
};

// Runs input (which must be a word over the alphabet followed by exactly
// one end marker) through the machine.
RunTrace run_pda(const CollapsePda& pda, const Word& input);

// Context-free grammar equivalent to the machine, produced by normalizing
// multi-symbol stack replacements into single-pop moves through
// intermediate control states and then applying the state-pair
// construction, trimmed to useful nonterminals.
class Grammar {
public:
  struct Symbol {
    bool is_terminal;
    char terminal;        // set when is_terminal
    std::size_t nonterminal;  // set otherwise
  };
  struct Production {
    std::size_t lhs;
    std::vector<Symbol> body;
  };
  struct NonterminalInfo {
    std::string name;
    bool generating = false;
    std::optional<std::size_t> min_length;  // engaged iff generating
  };

  Grammar(std::vector<NonterminalInfo> nonterminals, std::vector<Production> productions,
          std::size_t start, std::string terminals, std::optional<Word> min_word);

  const std::vector<NonterminalInfo>& nonterminals() const { return nonterminals_; }
  const std::vector<Production>& productions() const { return productions_; }
  std::size_t start() const { return start_; }
  const std::string& terminals() const { return terminals_; }

  bool language_empty() const { return !nonterminals_[start_].generating; }
  // Shortest word of the language, ties broken toward precedence-least
  // symbols; disengaged iff the language is empty.
  const std::optional<Word>& min_word() const { return min_word_; }

private:
  std::vector<NonterminalInfo> nonterminals_;
  std::vector<Production> productions_;
  std::size_t start_;
  std::string terminals_;
  std::optional<Word> min_word_;
};

Grammar pda_to_grammar(const CollapsePda& pda);

// Emptiness and shortest witness for L(u,v); the witness has the end
// marker stripped and is re-verified against the machine before returning.
struct LanguageDecision {
  bool empty = true;
  std::optional<Word> witness;
};

LanguageDecision decide_language(const CollapsePda& pda);
LanguageDecision decide_language(const RewriteSystem& system, const Word& u, const Word& v);
LanguageDecision decide_language(const RewriteSystem& system, const Word& u, const Word& v,
                                 const Evidence& evidence);

} // namespace strew
