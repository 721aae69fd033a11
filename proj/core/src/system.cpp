#include "strew/system.hpp"

#include <algorithm>

namespace strew {

namespace {

RuleTerminationReason classify_rule(const Rule& rule, const Alphabet& alphabet) {
  if (rule.lhs.size() > rule.rhs.size())
    return RuleTerminationReason::LengthReducing;
  if (rule.lhs.size() == rule.rhs.size() &&
      compare_shortlex(rule.rhs, rule.lhs, alphabet) == Ordering::Less)
    return RuleTerminationReason::ShortlexDecreasing;
  return RuleTerminationReason::None;
}

} // namespace

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<Rule> rules,
                             std::set<std::string> assumptions)
    : alphabet_(std::move(alphabet)),
      rules_(std::move(rules)),
      assumptions_(std::move(assumptions)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& rule = rules_[i];
    if (rule.lhs.empty())
      throw InputError("rule " + std::to_string(i) + ": left-hand side must be non-empty");
    alphabet_.require_word(rule.lhs, "rule lhs");
    alphabet_.require_word(rule.rhs, "rule rhs");
    for (std::size_t j = 0; j < i; ++j) {
      if (rules_[j] == rule)
        throw InputError("rule " + std::to_string(i) + ": duplicate of rule " +
                         std::to_string(j));
    }
  }
  termination_reasons_.reserve(rules_.size());
  for (const Rule& rule : rules_)
    termination_reasons_.push_back(classify_rule(rule, alphabet_));
  shortlex_terminating_ =
      std::all_of(termination_reasons_.begin(), termination_reasons_.end(),
                  [](RuleTerminationReason r) { return r != RuleTerminationReason::None; });
}

bool RewriteSystem::right_reduced() const {
  for (const Rule& rule : rules_) {
    for (const Rule& other : rules_) {
      if (rule.rhs.find(other.lhs) != Word::npos)
        return false;
    }
  }
  return true;
}

RewriteSystem RewriteSystem::with_assumption(const std::string& fact) const {
  std::set<std::string> assumptions = assumptions_;
  assumptions.insert(fact);
  return RewriteSystem(alphabet_, rules_, std::move(assumptions));
}

Evidence Evidence::from_system(const RewriteSystem& system) {
  Evidence ev;
  if (system.shortlex_terminating())
    ev.termination = Provenance::Verified;
  else if (system.assumes(kAssumeTerminating))
    ev.termination = Provenance::Assumed;
  if (system.assumes(kAssumeConfluent))
    ev.confluence = Provenance::Assumed;
  if (system.assumes(kAssumeForwardClosed))
    ev.forward_closure = Provenance::Assumed;
  return ev;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Verified: return "verified";
    case Provenance::Assumed: return "assumed";
    case Provenance::Absent: return "absent";
  }
  return "absent";
}

} // namespace strew
