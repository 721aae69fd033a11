// Acceptance suite: one callable check per criterion, each printing a
// single PASS/FAIL line. Exit code is the number of failed criteria.

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>

#include "strew/decide.hpp"
#include "strew/oracle.hpp"
#include "strew/rewrite.hpp"
#include "testsupport.hpp"

using namespace strew;
using test::curated_suite;
using test::make_system;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  int number;
  const char* name;
  bool (*check)(std::string& detail);
};

// 1. Overlap ground truth.
bool criterion_overlaps(std::string& detail) {
  bool ok = overlaps("aba", "acc") && !overlaps("aba", "cca") && overlaps("aba", "aba");
  detail = "three fixed overlap cases";
  return ok;
}

// 2. decideLanguage vs brute force on every rhs and 50 random pairs per
// system, oracle bound 8, total runtime within 60 s.
bool criterion_oracle_agreement(std::string& detail) {
  auto start = Clock::now();
  std::mt19937 rng(20240811);
  SearchBudget budget{8, 2000000};
  std::size_t queries = 0;
  for (const auto& entry : curated_suite()) {
    const RewriteSystem& system = entry.reduced;
    std::vector<std::pair<Word, Word>> probes;
    for (const Rule& rule : system.rules())
      probes.push_back({rule.rhs, rule.rhs});
    for (int i = 0; i < 50; ++i)
      probes.push_back({test::random_irreducible(system, rng, 4),
                        test::random_irreducible(system, rng, 4)});
    for (const auto& [u, v] : probes) {
      ++queries;
      LanguageDecision decision = decide_language(system, u, v, entry.evidence);
      auto oracle = brute_force_cap(system, u, v, budget);
      if (oracle.status == SearchStatus::Exhausted) {
        detail = "oracle budget exhausted on " + entry.name;
        return false;
      }
      if (oracle.found()) {
        if (decision.empty || decision.witness->size() != oracle.value->size()) {
          detail = "disagreement on " + entry.name + " u='" + u + "' v='" + v + "'";
          return false;
        }
      } else {
        if (!decision.empty && decision.witness->size() <= budget.max_word_length) {
          detail = "decision found '" + *decision.witness + "' the oracle missed on " +
                   entry.name;
          return false;
        }
      }
    }
  }
  double elapsed = seconds_since(start);
  std::ostringstream note;
  note << queries << " queries across " << curated_suite().size() << " systems in "
       << elapsed << " s";
  detail = note.str();
  return elapsed <= 60.0;
}

// 3. Right-reduction preserves irreducibility and normal forms pointwise
// up to length 8, and the forward-closure verdict.
bool criterion_right_reduce(std::string& detail) {
  for (const auto& entry : curated_suite()) {
    const RewriteSystem& original = entry.system;
    const RewriteSystem& reduced = entry.reduced;
    bool ok = true;
    test::for_each_word(original.alphabet(), 8, [&](const Word& w) {
      if (is_irreducible(original, w) != is_irreducible(reduced, w) ||
          normalize(original, w, entry.evidence) != normalize(reduced, w, entry.evidence)) {
        ok = false;
        return false;
      }
      return true;
    });
    if (!ok) {
      detail = "pointwise mismatch on " + entry.name;
      return false;
    }
    bool fc_original = !test::direct_forward_closure_violation(original, 6).has_value();
    bool fc_reduced = !test::direct_forward_closure_violation(reduced, 6).has_value();
    bool fc_decided = check_forward_closed(reduced, entry.evidence).holds;
    if (fc_original != fc_reduced || fc_reduced != fc_decided) {
      detail = "forward-closure verdict not preserved on " + entry.name;
      return false;
    }
  }
  detail = "all words up to length 8 over every suite system";
  return true;
}

// 4. Innermost redexes sampled from reachability witnesses normalize in
// exactly one leftmost-largest step.
bool criterion_single_step(std::string& detail) {
  std::mt19937 rng(4444);
  std::size_t checked = 0;
  for (const auto& entry : curated_suite()) {
    const RewriteSystem& system = entry.reduced;
    MatchAutomaton automaton(system);
    ReachabilityInfo reach = irreducible_reachable_states(automaton);

    std::vector<Word> s_parts;
    for (const auto& witness : reach.witness) {
      if (!witness)
        continue;
      s_parts.push_back(*witness);
      // Extend each witness along random match-free walks up to length 10.
      for (int trial = 0; trial < 10; ++trial) {
        Word x = *witness;
        while (x.size() < 10) {
          std::vector<char> choices;
          for (std::size_t c = 0; c < system.alphabet().size(); ++c) {
            char symbol = system.alphabet().symbol(c);
            if (is_irreducible(system, x + symbol))
              choices.push_back(symbol);
          }
          if (choices.empty())
            break;
          x.push_back(choices[rng() % choices.size()]);
          s_parts.push_back(x);
        }
      }
    }
    for (const Word& x : s_parts) {
      for (const Rule& rule : system.rules()) {
        Word redex = x + rule.lhs;
        auto split = leftmost_innermost_redex(system, redex);
        if (!split || split->end_position != redex.size())
          continue;  // not an innermost redex
        ++checked;
        auto stepped = ll_step(system, redex);
        if (!stepped || !is_irreducible(system, *stepped) ||
            *stepped != normalize(system, redex, entry.evidence)) {
          detail = "redex '" + redex + "' on " + entry.name;
          return false;
        }
      }
    }
  }
  detail = std::to_string(checked) + " innermost redexes";
  return checked > 0;
}

// 5. The normalization decomposition satisfies its four conditions on 200
// random irreducible pairs per system.
bool criterion_decomposition(std::string& detail) {
  std::mt19937 rng(5555);
  for (const auto& entry : curated_suite()) {
    const RewriteSystem& system = entry.reduced;
    for (int i = 0; i < 200; ++i) {
      Word x = test::random_irreducible(system, rng, 6);
      Word y = test::random_irreducible(system, rng, 6);
      auto steps = decompose_normalization(system, x, y, entry.evidence);
      Word joined;
      for (const auto& step : steps)
        joined += step.yi;
      bool ok = joined == y && steps.front().xi == x;
      for (const auto& step : steps)
        ok = ok && is_irreducible(system, step.xi) && is_irreducible(system, step.yi);
      for (std::size_t k = 0; ok && k + 1 < steps.size(); ++k) {
        Word redex = steps[k].xi + steps[k].yi;
        auto split = leftmost_innermost_redex(system, redex);
        ok = split && split->end_position == redex.size();
        // One rewrite step relates consecutive stages.
        if (ok) {
          bool one_step = false;
          for (const Word& reduct : test::single_step_reducts(system, redex))
            one_step = one_step || reduct == steps[k + 1].xi;
          ok = one_step;
        }
      }
      Word last = steps.back().xi + steps.back().yi;
      ok = ok && last == normalize(system, x + y, entry.evidence);
      if (!ok) {
        detail = "pair ('" + x + "', '" + y + "') on " + entry.name;
        return false;
      }
    }
  }
  detail = "200 pairs per suite system, all four conditions";
  return true;
}

// 6. Every prefix of a collapse witness collapses too.
bool criterion_prefix_collapse(std::string& detail) {
  std::mt19937 rng(6666);
  std::size_t witnesses = 0;
  for (const auto& entry : curated_suite()) {
    const RewriteSystem& system = entry.reduced;
    std::vector<std::pair<Word, Word>> found;
    auto verdict = is_subterm_collapsing(system, entry.evidence);
    if (verdict.collapsing)
      found.push_back({verdict.witness->rhs, verdict.witness->y});
    for (int i = 0; i < 10; ++i) {
      Word x = test::random_irreducible(system, rng, 4);
      if (auto y = causes_collapse(system, x, entry.evidence))
        found.push_back({x, *y});
    }
    for (const auto& [x, y] : found) {
      ++witnesses;
      for (std::size_t len = 0; len <= y.size(); ++len) {
        Word prefix_word = x + y.substr(0, len);
        if (!is_irreducible(system, prefix_word))
          continue;
        if (!causes_collapse(system, prefix_word, entry.evidence).has_value()) {
          detail = "prefix '" + prefix_word + "' of witness ('" + x + "','" + y +
                   "') does not collapse on " + entry.name;
          return false;
        }
      }
    }
  }
  detail = std::to_string(witnesses) + " collapse witnesses, all prefixes verified";
  return true;
}

// 7. The collapse decision agrees with brute force at bound 6, including
// the three fixed verdicts.
bool criterion_collapse_agreement(std::string& detail) {
  struct Fixed {
    const char* name;
    bool collapsing;
  };
  const Fixed fixed[] = {{"idempotent", true}, {"single_ab_c", false},
                         {"swap_certified", false}};
  SearchBudget budget{6, 2000000};
  for (const auto& entry : curated_suite()) {
    auto verdict = is_subterm_collapsing(entry.reduced, entry.evidence);
    for (const Fixed& f : fixed) {
      if (entry.name == f.name && verdict.collapsing != f.collapsing) {
        detail = std::string("fixed verdict wrong for ") + f.name;
        return false;
      }
    }
    auto oracle = brute_force_collapse(entry.reduced, budget);
    if (oracle.status == SearchStatus::Exhausted) {
      detail = "oracle budget exhausted on " + entry.name;
      return false;
    }
    if (oracle.found() && !verdict.collapsing) {
      detail = "oracle found a collapse the decision missed on " + entry.name;
      return false;
    }
    if (verdict.collapsing && !oracle.found() &&
        verdict.witness->rhs.size() <= budget.max_word_length &&
        verdict.witness->y.size() <= budget.max_word_length) {
      detail = "decision witness within bounds but oracle found none on " + entry.name;
      return false;
    }
  }
  detail = "decision vs bound-6 brute force on every suite system";
  return true;
}

// 8. Distinct left-hand sides after right-reduction; the seeded duplicate
// is flagged.
bool criterion_distinct_lhs(std::string& detail) {
  for (const auto& entry : curated_suite()) {
    if (!duplicate_lhs(entry.reduced).empty()) {
      detail = "duplicate lhs after right reduction on " + entry.name;
      return false;
    }
  }
  RewriteSystem seeded = make_system("abcd", {{"ab", "c"}, {"ab", "d"}});
  auto flags = duplicate_lhs(seeded);
  if (flags.size() != 1 || flags[0] != std::pair<std::size_t, std::size_t>{0, 1}) {
    detail = "seeded duplicate {ab->c, ab->d} not flagged";
    return false;
  }
  if (check_confluence(seeded).confluent) {
    detail = "seeded duplicate system wrongly reported confluent";
    return false;
  }
  detail = "suite clean; seeded violation flagged";
  return true;
}

// 9. Machine runs are deterministic and the stack below the marker equals
// the normal form of u plus the consumed prefix.
bool criterion_pda_invariants(std::string& detail) {
  std::mt19937 rng(9999);
  std::size_t steps_checked = 0;
  for (const auto& entry : curated_suite()) {
    const RewriteSystem& system = entry.reduced;
    MatchAutomaton automaton(system);
    for (int i = 0; i < 25; ++i) {
      Word u = test::random_irreducible(system, rng, 4);
      Word v = test::random_irreducible(system, rng, 4);
      Word w = test::random_word(system.alphabet(), rng, 1 + i % 8);
      CollapsePda pda = build_collapse_pda(system, u, v, entry.evidence);
      RunTrace trace = run_pda(pda, w + CollapsePda::kEndMarker);

      // Determinism: per consumed symbol exactly one transition applies:
      // the matcher yields either no match (push) or a unique longest
      // match whose lhs belongs to exactly one rule.
      Word stacked = normalize(system, u, entry.evidence);
      auto state = automaton.scan(MatchAutomaton::kRoot, stacked);
      for (char c : w) {
        auto [next, match] = advance(automaton, state, c);
        if (match) {
          std::size_t rules_for_lhs = 0;
          for (const Rule& rule : system.rules())
            rules_for_lhs += rule.lhs == system.rules()[*match].lhs ? 1 : 0;
          if (rules_for_lhs != 1) {
            detail = "ambiguous reduction on " + entry.name;
            return false;
          }
        }
        stacked = normalize(system, stacked + c, entry.evidence);
        state = automaton.scan(MatchAutomaton::kRoot, stacked);
      }

      for (std::size_t k = 0; k + 1 < trace.steps.size(); ++k) {
        ++steps_checked;
        Word expected = normalize(system, u + w.substr(0, k + 1), entry.evidence);
        if (trace.steps[k].stack != "$" + expected) {
          detail = "stack invariant broken on " + entry.name + " after '" +
                   w.substr(0, k + 1) + "'";
          return false;
        }
      }
    }
  }
  detail = std::to_string(steps_checked) + " traced steps";
  return true;
}

// 10. The full subterm-collapse decision scales within a cubic budget and
// finishes within 5 s at 100 rules.
bool criterion_scaling(std::string& detail) {
  const std::size_t sizes[] = {10, 20, 50, 100};
  double times[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    RewriteSystem family = test::scaling_family(sizes[i]);
    Evidence evidence = Evidence::from_system(family);
    if (evidence.termination != Provenance::Verified) {
      detail = "family not short-lex certified";
      return false;
    }
    if (!check_confluence(family, evidence).confluent) {
      detail = "family not confluent";
      return false;
    }
    evidence.confluence = Provenance::Verified;
    if (!check_forward_closed(family, evidence).holds) {
      detail = "family not forward-closed";
      return false;
    }
    evidence.forward_closure = Provenance::Verified;

    auto start = Clock::now();
    CollapseVerdict verdict = is_subterm_collapsing(family, evidence);
    times[i] = seconds_since(start);
    if (verdict.collapsing) {
      detail = "family unexpectedly collapsing at size " + std::to_string(sizes[i]);
      return false;
    }
  }
  std::ostringstream note;
  note << "decision times ";
  for (int i = 0; i < 4; ++i)
    note << sizes[i] << ":" << times[i] << "s ";
  detail = note.str();
  if (times[3] > 5.0)
    return false;
  // Cubic fit from the smaller sizes, with a 1 ms noise floor.
  double coefficient = 0.0;
  for (int i = 0; i < 3; ++i) {
    double t = std::max(times[i], 0.001);
    double n3 = static_cast<double>(sizes[i]) * sizes[i] * sizes[i];
    coefficient = std::max(coefficient, t / n3);
  }
  return times[3] <= coefficient * 100.0 * 100.0 * 100.0;
}

const Criterion kCriteria[] = {
    {1, "overlap ground truth", criterion_overlaps},
    {2, "cap decision vs oracle at bound 8", criterion_oracle_agreement},
    {3, "right reduction preserves normal forms and forward closure",
     criterion_right_reduce},
    {4, "innermost redexes normalize in one leftmost-largest step",
     criterion_single_step},
    {5, "normalization decomposition conditions", criterion_decomposition},
    {6, "collapse witnesses are prefix-closed", criterion_prefix_collapse},
    {7, "collapse decision vs oracle at bound 6", criterion_collapse_agreement},
    {8, "distinct left-hand sides", criterion_distinct_lhs},
    {9, "machine determinism and stack invariant", criterion_pda_invariants},
    {10, "polynomial scaling budget", criterion_scaling},
};

} // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
  }

  int failures = 0;
  for (const Criterion& criterion : kCriteria) {
    if (only != 0 && criterion.number != only)
      continue;
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.number << ": "
              << criterion.name << " (" << detail << ")" << std::endl;
    failures += ok ? 0 : 1;
  }
  return failures;
}
