#include "strew/analysis.hpp"

#include <algorithm>
#include <set>

#include "strew/matcher.hpp"

namespace strew {

namespace {

void require_termination(const Evidence& evidence, const char* who) {
  if (!evidence.has_termination())
    throw PreconditionError(std::string(who) + " requires termination evidence");
}

} // namespace

TerminationCertificate check_termination_shortlex(const RewriteSystem& system) {
  TerminationCertificate cert;
  cert.per_rule = system.termination_reasons();
  cert.verdict = system.shortlex_terminating() ? TerminationCertificate::Verdict::Certified
                                               : TerminationCertificate::Verdict::Unknown;
  return cert;
}

RewriteSystem right_reduce(const RewriteSystem& system) {
  return right_reduce(system, Evidence::from_system(system));
}

RewriteSystem right_reduce(const RewriteSystem& system, const Evidence& evidence) {
  require_termination(evidence, "right_reduce");
  // Normalizing a right-hand side can make a rule an exact duplicate of
  // another; duplicates do not change the rewrite relation, so they are
  // merged (first occurrence kept) both mid-iteration and in the result.
  auto dedupe = [](std::vector<Rule> rules) {
    std::vector<Rule> unique_rules;
    for (Rule& rule : rules) {
      if (std::find(unique_rules.begin(), unique_rules.end(), rule) == unique_rules.end())
        unique_rules.push_back(std::move(rule));
    }
    return unique_rules;
  };
  std::vector<Rule> rules = system.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    RewriteSystem current(system.alphabet(), dedupe(rules), system.assumptions());
    rules[i].rhs = normalize(current, rules[i].rhs, evidence);
  }
  return RewriteSystem(system.alphabet(), dedupe(rules), system.assumptions());
}

std::vector<CriticalPair> critical_pairs(const RewriteSystem& system) {
  const auto& rules = system.rules();
  std::vector<CriticalPair> pairs;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& l1 = rules[i].lhs;
    const Word& r1 = rules[i].rhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l2 = rules[j].lhs;
      const Word& r2 = rules[j].rhs;
      // Suffix-prefix overlaps l1 = x.t, l2 = t.y with t non-empty. The
      // degenerate case of a rule superposed on itself in place (i = j and
      // t the whole lhs) is the one trivial identity filtered out; other
      // pairs stay even when both sides coincide.
      for (std::size_t t = 1; t <= std::min(l1.size(), l2.size()); ++t) {
        if (l2.compare(0, t, l1, l1.size() - t, t) != 0)
          continue;
        if (i == j && t == l1.size())
          continue;
        Word left = r1 + l2.substr(t);
        Word right = l1.substr(0, l1.size() - t) + r2;
        pairs.push_back({left, right, i, j, OverlapKind::SuffixPrefix});
      }
      // Embeddings l2 = x.l1.y with l1 strictly inside; the equal-length
      // case is already covered by the whole-word suffix-prefix overlap.
      if (l1.size() < l2.size()) {
        for (std::size_t pos = l2.find(l1); pos != Word::npos;
             pos = l2.find(l1, pos + 1)) {
          Word left = r2;
          Word right = l2.substr(0, pos) + r1 + l2.substr(pos + l1.size());
          pairs.push_back({left, right, i, j, OverlapKind::Embedding});
        }
      }
    }
  }
  return pairs;
}

ConfluenceReport check_confluence(const RewriteSystem& system) {
  return check_confluence(system, Evidence::from_system(system));
}

ConfluenceReport check_confluence(const RewriteSystem& system, const Evidence& evidence) {
  require_termination(evidence, "check_confluence");
  ConfluenceReport report;
  for (const CriticalPair& pair : critical_pairs(system)) {
    Word nf_left = normalize(system, pair.left, evidence);
    Word nf_right = normalize(system, pair.right, evidence);
    if (nf_left != nf_right)
      report.non_joinable.push_back({pair, nf_left, nf_right});
  }
  report.confluent = report.non_joinable.empty();
  return report;
}

ForwardClosureReport check_forward_closed(const RewriteSystem& system) {
  return check_forward_closed(system, Evidence::from_system(system));
}

ForwardClosureReport check_forward_closed(const RewriteSystem& system,
                                          const Evidence& evidence) {
  require_termination(evidence, "check_forward_closed");
  if (!system.right_reduced())
    throw PreconditionError("check_forward_closed requires a right-reduced system");

  MatchAutomaton automaton(system);
  ReachabilityInfo reach = irreducible_reachable_states(automaton);
  const auto& rules = system.rules();

  // Whether x.l is an innermost redex with l-part l, and whether any
  // one-step reduct of it is irreducible, depend on x only through the
  // matcher state x reaches. Quantifying over the match-free reachable
  // states therefore decides the property exactly.
  for (std::size_t si = 0; si < automaton.state_count(); ++si) {
    auto state = static_cast<MatchAutomaton::State>(si);
    if (!reach.reachable(state))
      continue;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const Word& l = rules[i].lhs;
      std::vector<MatchAutomaton::State> walk;
      walk.reserve(l.size() + 1);
      walk.push_back(state);
      bool innermost = true;
      for (std::size_t j = 0; j < l.size(); ++j) {
        MatchAutomaton::State next = automaton.go(walk.back(), l[j]);
        if (j + 1 < l.size() && automaton.has_match(next)) {
          innermost = false;  // a proper prefix of x.l is already a redex
          break;
        }
        walk.push_back(next);
      }
      if (!innermost)
        continue;
      MatchAutomaton::State final_state = walk.back();
      auto longest = automaton.longest_match(final_state);
      if (!longest || rules[*longest].lhs.size() != l.size())
        continue;  // l is not the l-part of x.l

      // Some rewrite at a suffix lhs must produce an irreducible word.
      // Every lhs suffix has length <= |l| because l is the longest, so
      // the state of each reduct prefix lies on the walk.
      bool reducible_somewhere = false;
      for (std::size_t candidate : automaton.all_matches(final_state)) {
        const Word& rhs = rules[candidate].rhs;
        std::size_t keep = l.size() - rules[candidate].lhs.size();
        MatchAutomaton::State t = walk[keep];
        bool reduct_irreducible = true;
        for (char c : rhs) {
          t = automaton.go(t, c);
          if (automaton.has_match(t)) {
            reduct_irreducible = false;
            break;
          }
        }
        if (reduct_irreducible) {
          reducible_somewhere = true;
          break;
        }
      }
      if (!reducible_somewhere) {
        ForwardClosureReport report;
        report.holds = false;
        report.counterexample = {{*reach.witness[si], i}};
        return report;
      }
    }
  }
  ForwardClosureReport report;
  report.holds = true;
  return report;
}

QuasiDetReport check_quasi_deterministic(const RewriteSystem& system) {
  QuasiDetReport report;
  const auto& rules = system.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].rhs.empty())
      report.lambda_rhs.push_back(i);
    else if (rules[i].lhs.back() == rules[i].rhs.back())
      report.end_stable.push_back(i);
  }
  auto end_pair = [&](std::size_t i) {
    char a = rules[i].lhs.back();
    char b = rules[i].rhs.back();
    return std::pair<char, char>(std::min(a, b), std::max(a, b));
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (rules[i].rhs.empty())
      continue;  // no rightmost pair; already flagged above
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      if (rules[j].rhs.empty())
        continue;
      if (end_pair(i) == end_pair(j))
        report.end_pair_repetitions.push_back({i, j});
    }
  }
  report.holds = report.lambda_rhs.empty() && report.end_stable.empty() &&
                 report.end_pair_repetitions.empty();
  return report;
}

std::vector<RhsPair> rhs_critical_pairs(const RewriteSystem& system) {
  const auto& rules = system.rules();
  std::vector<RhsPair> pairs;
  std::set<std::pair<Word, Word>> seen;  // unordered word pairs, normalized
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      if (i == j)
        continue;
      const Word& r1 = rules[i].rhs;
      const Word& r2 = rules[j].rhs;
      if (r1.size() > r2.size())
        continue;
      if (r2.compare(r2.size() - r1.size(), r1.size(), r1) != 0)
        continue;
      Word extension = r2.substr(0, r2.size() - r1.size());
      Word first = extension + rules[i].lhs;
      Word second = rules[j].lhs;
      auto key = first <= second ? std::make_pair(first, second)
                                 : std::make_pair(second, first);
      if (!seen.insert(key).second)
        continue;
      pairs.push_back({std::move(first), std::move(second), std::move(extension), i, j});
    }
  }
  return pairs;
}

RhsQuasiDetReport check_rhs_quasi_deterministic(const RewriteSystem& system) {
  RhsQuasiDetReport report;
  report.pairs = rhs_critical_pairs(system);
  auto end_pair = [&](const RhsPair& p) {
    return std::pair<char, char>(std::min(p.first.back(), p.second.back()),
                                 std::max(p.first.back(), p.second.back()));
  };
  for (std::size_t i = 0; i < report.pairs.size(); ++i) {
    if (report.pairs[i].first.back() == report.pairs[i].second.back())
      report.end_stable.push_back(i);
    for (std::size_t j = i + 1; j < report.pairs.size(); ++j) {
      if (end_pair(report.pairs[i]) == end_pair(report.pairs[j]))
        report.repetitions.push_back({i, j});
    }
  }
  report.holds = report.end_stable.empty() && report.repetitions.empty();
  return report;
}

OverlapReport overlap_diagnostics(const RewriteSystem& system) {
  OverlapReport report;
  const auto& rules = system.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      if (overlaps(rules[i].lhs, rules[j].lhs))
        report.lhs_lhs.push_back({i, j});
      if (overlaps(rules[i].lhs, rules[j].rhs))
        report.lhs_rhs.push_back({i, j});
    }
  }
  return report;
}

std::vector<std::pair<std::size_t, std::size_t>> duplicate_lhs(const RewriteSystem& system) {
  std::vector<std::pair<std::size_t, std::size_t>> result;
  const auto& rules = system.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      if (rules[i].lhs == rules[j].lhs)
        result.push_back({i, j});
    }
  }
  return result;
}

} // namespace strew
