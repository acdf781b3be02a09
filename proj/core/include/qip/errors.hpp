#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qip {

/// Bad arguments: invalid indices, arity mismatches, malformed input.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Register size outside what the dense simulator supports.
class CapacityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Scalar argument outside its documented domain (e.g. integer outside the
/// two's-complement window of a register).
class RangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A polynomial value does not fit the value register. Carries the offending
/// key so callers can report which input overflowed.
class ValueOverflowError : public std::overflow_error {
 public:
  ValueOverflowError(std::uint64_t key, std::int64_t value, const std::string& what)
      : std::overflow_error(what), key_(key), value_(value) {}

  std::uint64_t key() const { return key_; }
  std::int64_t value() const { return value_; }

 private:
  std::uint64_t key_;
  std::int64_t value_;
};

/// Requested confidence level exceeds the total probability mass.
class UnreachableAlphaError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qip
