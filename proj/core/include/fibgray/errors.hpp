#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibgray {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A SequenceSpec whose parameters violate their constraints.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// A recurrence produced a term that is not larger than its predecessor.
class NonMonotonicSequence : public Error {
 public:
  NonMonotonicSequence(std::size_t index, const std::string& detail);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Argument outside an operation's domain (e.g. N = 0 for largest-term lookup).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A digit exceeds floor((a_{i+1} - 1) / a_i) at its position.
class DigitOutOfRange : public Error {
 public:
  DigitOutOfRange(std::size_t index, std::size_t position, std::uint64_t digit,
                  std::uint64_t bound);

  /// Weight index i, counted from the right (least significant is 0).
  std::size_t index() const noexcept { return index_; }
  /// Character position, counted from the left starting at 0.
  std::size_t position() const noexcept { return position_; }
  std::uint64_t digit() const noexcept { return digit_; }
  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::size_t index_;
  std::size_t position_;
  std::uint64_t digit_;
  std::uint64_t bound_;
};

class TooLong : public Error {
 public:
  TooLong(std::size_t length, std::size_t target);
};

class NonBinaryDigit : public Error {
 public:
  explicit NonBinaryDigit(std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NonBinaryValue : public Error {
 public:
  explicit NonBinaryValue(std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs);
};

class EmptyPermutation : public Error {
 public:
  EmptyPermutation();
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// Raised when an eager construction or brute-force search would exceed its
/// configured element budget.
class SizeGuardExceeded : public Error {
 public:
  SizeGuardExceeded(const std::string& what, std::string requested,
                    std::uint64_t limit);
  const std::string& requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string requested_;
  std::uint64_t limit_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fibgray
