#pragma once

#include <stdexcept>
#include <string>

namespace perfmat {

// Malformed input: bad graph6 bytes, out-of-range vertices, unrealizable
// degree sequences and the like.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exponential kernel was asked to run past its configured size limit.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace perfmat
