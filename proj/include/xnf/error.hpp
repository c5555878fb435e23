#pragma once

#include <stdexcept>
#include <string>

namespace xnf {

// Bad input from the caller: non-prime-power q, gcd(n, q) != 1, ...
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation ran past its budget (factoring iterations, field size).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant. Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace xnf
