#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strew/word.hpp"

namespace strew {

struct Rule {
  Word lhs;
  Word rhs;

  bool operator==(const Rule& other) const = default;
};

// Assumption tokens a system may declare without proof.
inline constexpr const char* kAssumeTerminating = "terminating";
inline constexpr const char* kAssumeConfluent = "confluent";
inline constexpr const char* kAssumeForwardClosed = "forward-closed";

// Why a single rule is known to decrease under short-lex.
enum class RuleTerminationReason { LengthReducing, ShortlexDecreasing, None };

// A string rewriting system: an alphabet with precedence, an ordered list
// of rules, and a set of declared-but-unverified assumptions. Immutable
// after construction.
class RewriteSystem {
public:
  RewriteSystem(Alphabet alphabet, std::vector<Rule> rules,
                std::set<std::string> assumptions = {});

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::set<std::string>& assumptions() const { return assumptions_; }

  bool assumes(const std::string& fact) const { return assumptions_.count(fact) != 0; }

  // Per-rule short-lex decrease reasons, computed once at construction.
  const std::vector<RuleTerminationReason>& termination_reasons() const {
    return termination_reasons_;
  }
  // True iff every rule strictly decreases under short-lex.
  bool shortlex_terminating() const { return shortlex_terminating_; }

  // True iff every right-hand side is irreducible.
  bool right_reduced() const;

  RewriteSystem with_assumption(const std::string& fact) const;

private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::set<std::string> assumptions_;
  std::vector<RuleTerminationReason> termination_reasons_;
  bool shortlex_terminating_ = false;
};

// Where a fact used by an operation came from.
enum class Provenance { Verified, Assumed, Absent };

// The facts rewriting and decision operations rely on but cannot decide
// themselves. Checkers upgrade fields to Verified; declared assumptions
// yield Assumed.
struct Evidence {
  Provenance termination = Provenance::Absent;
  Provenance confluence = Provenance::Absent;
  Provenance forward_closure = Provenance::Absent;

  static Evidence from_system(const RewriteSystem& system);

  bool has_termination() const { return termination != Provenance::Absent; }
  bool has_convergence() const {
    return has_termination() && confluence != Provenance::Absent;
  }
  bool has_forward_closure() const { return forward_closure != Provenance::Absent; }
};

const char* to_string(Provenance p);

} // namespace strew
