#pragma once

#include <stdexcept>
#include <string>

namespace qtwist {

/// Malformed user input (field specs, polynomial strings, CLI flags).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain: zero inverse, mixed fields,
/// even-degree input where odd degree is required, and so on.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations that must agree did not. Never expected to
/// fire; if it does, something is wrong in the library.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw ConsistencyError(what);
}

}  // namespace qtwist
