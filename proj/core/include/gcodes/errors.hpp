#pragma once

#include <stdexcept>
#include <string>

namespace gcodes {

/// Caller passed arguments that violate an interface contract
/// (mismatched fields, overlapping vertex sets, malformed input files).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematically undefined request (inverse of zero, supports of the
/// zero codeword).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The instance is too large for the requested algorithm.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A numeric routine failed to converge within its budget.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gcodes
