#pragma once

#include <stdexcept>
#include <string>

namespace p3c {

/// Malformed input: bad encodings, out-of-range vertices, self-loops.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact search would exceed its size guard.
class guard_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A precondition on the graph's structure does not hold (e.g. not a tree).
class structure_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace p3c
