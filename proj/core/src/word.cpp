#include "strew/word.hpp"

#include <cctype>

namespace strew {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty())
    throw InputError("alphabet must not be empty");
  rank_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(symbols_[i]);
    if (!std::isprint(c) || std::isspace(c))
      throw InputError("alphabet symbol is not printable");
    if (rank_[c] >= 0)
      throw InputError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    rank_[c] = static_cast<int>(i);
  }
}

int Alphabet::rank(char c) const {
  int r = rank_[static_cast<unsigned char>(c)];
  if (r < 0)
    throw InputError(std::string("symbol '") + c + "' is not in the alphabet");
  return r;
}

void Alphabet::require_word(const Word& w, std::string_view role) const {
  for (char c : w) {
    if (!contains(c))
      throw InputError(std::string(role) + ": symbol '" + c + "' is not in the alphabet");
  }
}

Ordering compare_shortlex(const Word& a, const Word& b, const Alphabet& alphabet) {
  alphabet.require_word(a, "compare_shortlex");
  alphabet.require_word(b, "compare_shortlex");
  if (a.size() != b.size())
    return a.size() < b.size() ? Ordering::Less : Ordering::Greater;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = alphabet.rank(a[i]);
    int rb = alphabet.rank(b[i]);
    if (ra != rb)
      return ra < rb ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

bool overlaps(const Word& u, const Word& v) {
  // Suffix lengths 1 .. |u|-1: proper suffixes only.
  for (std::size_t n = 1; n < u.size(); ++n) {
    if (n > v.size())
      break;
    if (v.compare(0, n, u, u.size() - n, n) == 0)
      return true;
  }
  return false;
}

std::string to_monadic_term(const Word& w) {
  std::string term = "x";
  for (char c : w)
    term = std::string(1, c) + "(" + term + ")";
  return term;
}

} // namespace strew
