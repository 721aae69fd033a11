#include "strew/decide.hpp"

#include <set>

#include "strew/rewrite.hpp"

namespace strew {

namespace {

void require_decision_preconditions(const RewriteSystem& system, const Evidence& evidence,
                                    const char* who) {
  if (!evidence.has_convergence() || !evidence.has_forward_closure())
    throw PreconditionError(std::string(who) +
                            " requires convergence and forward-closure evidence");
  if (!system.right_reduced())
    throw PreconditionError(std::string(who) + " requires a right-reduced system");
}

} // namespace

std::optional<Word> causes_collapse(const RewriteSystem& system, const Word& x) {
  return causes_collapse(system, x, Evidence::from_system(system));
}

std::optional<Word> causes_collapse(const RewriteSystem& system, const Word& x,
                                    const Evidence& evidence) {
  require_decision_preconditions(system, evidence, "causes_collapse");
  if (!is_irreducible(system, x))
    throw PreconditionError("causes_collapse: x must be irreducible");
  LanguageDecision decision = decide_language(system, x, x, evidence);
  if (decision.empty)
    return std::nullopt;
  return decision.witness;
}

CollapseVerdict is_subterm_collapsing(const RewriteSystem& system) {
  return is_subterm_collapsing(system, Evidence::from_system(system));
}

CollapseVerdict is_subterm_collapsing(const RewriteSystem& system, const Evidence& evidence) {
  require_decision_preconditions(system, evidence, "is_subterm_collapsing");
  CollapseVerdict verdict;
  auto matcher = std::make_shared<MatchAutomaton>(system);
  std::set<Word> tried;
  for (std::size_t i = 0; i < system.rules().size(); ++i) {
    const Word& rhs = system.rules()[i].rhs;
    if (!tried.insert(rhs).second)
      continue;  // identical rhs defines the same language
    CollapsePda pda = build_collapse_pda(system, rhs, rhs, evidence, matcher);
    LanguageDecision decision = decide_language(pda);
    if (!decision.empty) {
      verdict.collapsing = true;
      verdict.witness = {rhs, *decision.witness, i};
      Word closed = normalize(system, rhs + *decision.witness, evidence);
      if (closed != rhs)
        throw Error("is_subterm_collapsing: internal error: witness failed re-verification");
      return verdict;
    }
  }
  return verdict;
}

CapResult solve_cap(const RewriteSystem& system, const Word& u, const Word& v) {
  return solve_cap(system, u, v, Evidence::from_system(system));
}

CapResult solve_cap(const RewriteSystem& system, const Word& u, const Word& v,
                    const Evidence& evidence) {
  require_decision_preconditions(system, evidence, "solve_cap");
  if (u.empty() || v.empty())
    throw PreconditionError("solve_cap: u and v must be non-empty");
  if (!is_irreducible(system, u) || !is_irreducible(system, v))
    throw PreconditionError("solve_cap: u and v must be irreducible");
  LanguageDecision decision = decide_language(system, u, v, evidence);
  CapResult result;
  result.derivable = !decision.empty;
  if (result.derivable) {
    if (normalize(system, u + *decision.witness, evidence) != v)
      throw Error("solve_cap: internal error: cap term failed re-verification");
    result.cap_term = decision.witness;
  }
  return result;
}

LmReport verify_lm_system(const RewriteSystem& system) {
  LmReport report;
  report.termination = check_termination_shortlex(system);
  Evidence evidence = Evidence::from_system(system);
  report.termination_provenance = evidence.termination;

  // The syntactic checks run regardless of evidence.
  report.quasi_det = check_quasi_deterministic(system);
  report.overlaps = overlap_diagnostics(system);
  report.duplicate_lhs_pairs = duplicate_lhs(system);

  if (!evidence.has_termination()) {
    report.inconclusive = true;
    report.rhs_quasi_det = check_rhs_quasi_deterministic(system);
    return report;
  }

  RewriteSystem reduced = right_reduce(system, evidence);
  report.right_reduced = reduced;
  report.rhs_quasi_det = check_rhs_quasi_deterministic(reduced);

  ConfluenceReport confluence = check_confluence(reduced, evidence);
  report.confluence = confluence;
  if (confluence.confluent)
    evidence.confluence = Provenance::Verified;
  else
    evidence.confluence = Provenance::Absent;

  bool forward_closed = false;
  if (confluence.confluent) {
    ForwardClosureReport fc = check_forward_closed(reduced, evidence);
    report.forward_closure = fc;
    forward_closed = fc.holds;
    evidence.forward_closure = fc.holds ? Provenance::Verified : Provenance::Absent;
  }

  bool non_collapsing = false;
  if (confluence.confluent && forward_closed) {
    CollapseVerdict collapse = is_subterm_collapsing(reduced, evidence);
    report.collapse = collapse;
    non_collapsing = !collapse.collapsing;
  }

  report.is_lm = confluence.confluent && forward_closed && non_collapsing &&
                 report.rhs_quasi_det.holds;
  report.conditional =
      report.is_lm && report.termination_provenance == Provenance::Assumed;
  return report;
}

} // namespace strew
