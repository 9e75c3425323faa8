#pragma once

#include <stdexcept>
#include <string>

namespace nestfock {

// Bad input: a cell outside a diagram, a missing part, a degree mismatch.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal identity failed (non-integral hook product, Gram solve
// mismatch). Always a bug in a formula, never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Unreadable or tampered cache file.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nestfock
