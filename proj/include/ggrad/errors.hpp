#pragma once

#include <stdexcept>
#include <string>

namespace ggrad {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A size parameter outside the supported range (group families, form degrees).
struct OutOfRangeError : Error {
  using Error::Error;
};

// A weight whose coordinate count does not match the group's rank.
struct LengthError : Error {
  using Error::Error;
};

// A weight failing the dominance conditions of its group; the message names
// the first violated inequality.
struct NotDominantError : Error {
  using Error::Error;
};

// An operation applied to a group family it is not defined for.
struct WrongGroupError : Error {
  using Error::Error;
};

// An epsilon that is not a relevant weight of the given lambda.
struct NotRelevantError : Error {
  using Error::Error;
};

// Static group data and computed values disagree; always a bug, never
// swallowed.
struct InternalInconsistencyError : Error {
  using Error::Error;
};

}  // namespace ggrad
