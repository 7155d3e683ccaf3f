#pragma once

#include <stdexcept>
#include <string>

namespace awstar {

/// Bad input: a violated precondition, shape mismatch, or malformed instance.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal postcondition failed. Always a bug, never a property of the
/// input.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace awstar
