#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "strew/analysis.hpp"
#include "strew/pushdown.hpp"
#include "strew/system.hpp"

namespace strew::test {

RewriteSystem make_system(const std::string& alphabet,
                          std::vector<std::pair<Word, Word>> rules,
                          std::set<std::string> assumptions = {});

// A curated system together with its right-reduced form and verified
// evidence. Every entry passes the short-lex termination check, the
// confluence check, and (right-reduced) the forward-closure check.
struct SuiteEntry {
  std::string name;
  RewriteSystem system;
  RewriteSystem reduced;
  Evidence evidence;  // termination/confluence/forward-closure all Verified
};

// At least 20 systems, alphabets up to 6 symbols, up to 6 rules; a mix of
// collapsing and non-collapsing, a few not right-reduced as given.
const std::vector<SuiteEntry>& curated_suite();

// Enumerates every word over the alphabet up to max_len (including the
// empty word) until fn returns false.
void for_each_word(const Alphabet& alphabet, std::size_t max_len,
                   const std::function<bool(const Word&)>& fn);

// Uniform random word of the given length.
Word random_word(const Alphabet& alphabet, std::mt19937& rng, std::size_t len);

// Random irreducible word with length in [0, max_len], built by extending
// irreducible prefixes; length chosen uniformly among reachable lengths.
Word random_irreducible(const RewriteSystem& system, std::mt19937& rng,
                        std::size_t max_len);

// Independent single-step enumerator: every one-step reduct of w.
std::vector<Word> single_step_reducts(const RewriteSystem& system, const Word& w);

// Semantic forward-closure check by bounded enumeration of s-parts.
// Returns a violating innermost redex, if any, with s-part length <= bound.
std::optional<Word> direct_forward_closure_violation(const RewriteSystem& system,
                                                     std::size_t bound);

// All words the grammar generates up to the length bound, by derivation
// search pruned with the per-nonterminal minimal lengths.
std::set<Word> grammar_words_up_to(const Grammar& grammar, std::size_t max_len);

// The generated forward-closed family used by the scaling budget and the
// benchmarks: `size` rules over a 10-symbol alphabet, pairwise
// non-overlapping left-hand sides, irreducible right-hand sides, provably
// non-collapsing. size <= 117.
RewriteSystem scaling_family(std::size_t size);

} // namespace strew::test
