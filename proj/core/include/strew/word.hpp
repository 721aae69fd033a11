#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "strew/error.hpp"

namespace strew {

// A word is a finite string over an Alphabet; the empty string is the
// identity. Plain std::string keeps words printable and cheap; operations
// that need an alphabet validate membership themselves.
using Word = std::string;

// Finite ordered alphabet. The listing order is the precedence: a symbol
// listed later is greater under the base order used by short-lex.
class Alphabet {
public:
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }

  bool contains(char c) const { return rank_[static_cast<unsigned char>(c)] >= 0; }

  // Precedence rank, 0 = least. Throws InputError for foreign symbols.
  int rank(char c) const;

  char symbol(std::size_t rank) const { return symbols_.at(rank); }

  // Throws InputError naming `role` if some symbol of w is foreign.
  void require_word(const Word& w, std::string_view role) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
  std::string symbols_;
  std::array<int, 256> rank_{};
};

enum class Ordering { Less, Equal, Greater };

// Short-lex: length first, then lexicographic by precedence rank at the
// leftmost differing position.
Ordering compare_shortlex(const Word& a, const Word& b, const Alphabet& alphabet);

// True iff some non-empty proper suffix of u is a prefix of v.
bool overlaps(const Word& u, const Word& v);

// Renders a word as a monadic term over the variable x, first symbol
// applied innermost: "gh" -> "h(g(x))".
std::string to_monadic_term(const Word& w);

} // namespace strew
