#pragma once

#include <stdexcept>
#include <string>

namespace prudent {

// Caller passed arguments that violate an operation's contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numeric evaluation was requested outside its region of validity.
// The message names the violated constraint.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation hit the pole at q = 1/2; use the Laurent data instead.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A request that would exceed the resources the brute-force search is sized for.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace prudent
