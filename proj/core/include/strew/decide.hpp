#pragma once

#include <optional>

#include "strew/analysis.hpp"
#include "strew/pushdown.hpp"
#include "strew/system.hpp"

namespace strew {

// Shortest non-empty y with nf(x.y) = x, or nothing. x must be irreducible
// and the system right-reduced, with convergence and forward-closure
// evidence.
std::optional<Word> causes_collapse(const RewriteSystem& system, const Word& x);
std::optional<Word> causes_collapse(const RewriteSystem& system, const Word& x,
                                    const Evidence& evidence);

// Verdict of the subterm-collapse decision. The witness is the collapsing
// right-hand side, the shortest y closing the loop, and the source rule.
struct CollapseVerdict {
  bool collapsing = false;
  struct Witness {
    Word rhs;
    Word y;
    std::size_t rule_index;
  };
  std::optional<Witness> witness;
};

// Decides whether the (right-reduced) system is subterm-collapsing by
// testing, for each right-hand side r, whether L(r,r) is non-empty.
CollapseVerdict is_subterm_collapsing(const RewriteSystem& system);
CollapseVerdict is_subterm_collapsing(const RewriteSystem& system, const Evidence& evidence);

// The cap problem: is there a non-empty w with u.w normalizing to v?
struct CapResult {
  bool derivable = false;
  std::optional<Word> cap_term;
};

CapResult solve_cap(const RewriteSystem& system, const Word& u, const Word& v);
CapResult solve_cap(const RewriteSystem& system, const Word& u, const Word& v,
                    const Evidence& evidence);

// Full verdict: the system is an LM-system iff it is convergent (with the
// recorded evidence), right-reduced, non-subterm-collapsing,
// forward-closed, and its RHS pair set is quasi-deterministic. Stages that
// could not run are disengaged and flagged inconclusive.
struct LmReport {
  bool is_lm = false;
  // True when the verdict rests on an assumed rather than certified fact.
  bool conditional = false;
  // No termination evidence at all: nothing past the certificate ran.
  bool inconclusive = false;

  TerminationCertificate termination;
  Provenance termination_provenance = Provenance::Absent;
  std::optional<RewriteSystem> right_reduced;
  std::optional<ConfluenceReport> confluence;
  std::optional<ForwardClosureReport> forward_closure;
  std::optional<CollapseVerdict> collapse;
  QuasiDetReport quasi_det;
  RhsQuasiDetReport rhs_quasi_det;
  OverlapReport overlaps;
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_lhs_pairs;
};

LmReport verify_lm_system(const RewriteSystem& system);

} // namespace strew
