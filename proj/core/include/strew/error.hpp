#pragma once

#include <stdexcept>
#include <string>

namespace strew {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: unknown symbols, bad file syntax, ill-formed PDA input.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// A documented precondition does not hold: missing termination evidence,
// reducible words where irreducible ones are required, and assumption
// violations detected while running.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

} // namespace strew
