#pragma once

#include <string>

#include "strew/system.hpp"

namespace strew {

// A parsed .srs file. The text grammar:
//
//   # comment lines start with '#'
//   alphabet: a b c        (listing order = ascending precedence)
//   rules:
//   ab -> c                (one rule per line; `eps` denotes the empty word)
//   assume: terminating    (optional; also `confluent`, `forward-closed`)
//
struct SystemFile {
  RewriteSystem system;
};

// Throws InputError with a line number for unknown symbols, missing
// sections, empty left-hand sides, and duplicate rules.
SystemFile parse_system_file(const std::string& text);

// Canonical text form; parse(serialize(s)) reproduces the system.
std::string serialize_system(const RewriteSystem& system);

} // namespace strew
