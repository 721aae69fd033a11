#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "strew/rewrite.hpp"
#include "strew/system.hpp"

namespace strew {

// Sufficient termination certificate: every rule either shortens the word
// or keeps the length and strictly decreases under short-lex. Certified
// implies termination; Unknown implies nothing.
struct TerminationCertificate {
  enum class Verdict { Certified, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::vector<RuleTerminationReason> per_rule;

  bool certified() const { return verdict == Verdict::Certified; }
};

TerminationCertificate check_termination_shortlex(const RewriteSystem& system);

// Replaces every right-hand side by its normal form, rule by rule in
// listing order, until all right-hand sides are irreducible. Left-hand
// sides are untouched. Rules that become exact duplicates are merged.
RewriteSystem right_reduce(const RewriteSystem& system);
RewriteSystem right_reduce(const RewriteSystem& system, const Evidence& evidence);

enum class OverlapKind { SuffixPrefix, Embedding };

// A divergence from a common superposition: one rewrite step each way.
struct CriticalPair {
  Word left;
  Word right;
  std::size_t rule_a = 0;
  std::size_t rule_b = 0;
  OverlapKind kind = OverlapKind::SuffixPrefix;
};

std::vector<CriticalPair> critical_pairs(const RewriteSystem& system);

struct ConfluenceReport {
  struct Failure {
    CriticalPair pair;
    Word nf_left;
    Word nf_right;
  };
  bool confluent = false;
  std::vector<Failure> non_joinable;
};

// Confluence by joinability of all critical pairs; needs termination
// evidence since both sides are normalized.
ConfluenceReport check_confluence(const RewriteSystem& system);
ConfluenceReport check_confluence(const RewriteSystem& system, const Evidence& evidence);

// Forward closure: every innermost redex reaches an irreducible word in a
// single rewrite step. Decided exactly over matcher states; the
// counterexample is a shortest irreducible s-part together with the rule
// whose lhs completes the failing innermost redex.
struct ForwardClosureReport {
  bool holds = false;
  std::optional<std::pair<Word, std::size_t>> counterexample;
};

ForwardClosureReport check_forward_closed(const RewriteSystem& system);
ForwardClosureReport check_forward_closed(const RewriteSystem& system,
                                          const Evidence& evidence);

// The three quasi-determinism conditions, evaluated literally.
struct QuasiDetReport {
  bool holds = false;
  std::vector<std::size_t> lambda_rhs;
  std::vector<std::size_t> end_stable;
  std::vector<std::pair<std::size_t, std::size_t>> end_pair_repetitions;
};

QuasiDetReport check_quasi_deterministic(const RewriteSystem& system);

// Right-hand-side critical pair: r2 = extension . r1 for distinct rules
// makes {extension . l1, l2} a pair. Unordered duplicates appear once.
struct RhsPair {
  Word first;      // extension . l1
  Word second;     // l2
  Word extension;  // may be empty
  std::size_t rule_suffix = 0;  // the rule contributing r1
  std::size_t rule_whole = 0;   // the rule contributing r2
};

std::vector<RhsPair> rhs_critical_pairs(const RewriteSystem& system);

// Quasi-determinism over the RHS pair set: flags pairs whose two words
// share a rightmost symbol and distinct pairs with identical unordered
// rightmost-symbol pairs.
struct RhsQuasiDetReport {
  bool holds = false;
  std::vector<RhsPair> pairs;
  std::vector<std::size_t> end_stable;  // indices into pairs
  std::vector<std::pair<std::size_t, std::size_t>> repetitions;
};

RhsQuasiDetReport check_rhs_quasi_deterministic(const RewriteSystem& system);

// Overlap diagnostics: lhs-lhs overlaps (a lhs with itself included) and
// lhs-rhs overlaps, in the overlap direction of overlaps().
struct OverlapReport {
  std::vector<std::pair<std::size_t, std::size_t>> lhs_lhs;
  std::vector<std::pair<std::size_t, std::size_t>> lhs_rhs;

  bool clean() const { return lhs_lhs.empty() && lhs_rhs.empty(); }
};

OverlapReport overlap_diagnostics(const RewriteSystem& system);

// Pairs of distinct rules sharing a left-hand side. Empty for any system
// that is genuinely convergent, forward-closed, and right-reduced.
std::vector<std::pair<std::size_t, std::size_t>> duplicate_lhs(const RewriteSystem& system);

} // namespace strew
