#pragma once

#include <stdexcept>
#include <string>

namespace jsr {

/// Malformed or out-of-contract input: bad documents, invalid words,
/// dimension mismatches. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The product-count budget was exhausted during enumeration. Exit code 2.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural identity that must hold by construction was violated.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jsr
