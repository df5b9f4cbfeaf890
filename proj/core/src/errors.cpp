#include "fibgray/errors.hpp"

#include <sstream>

#include "fibgray/natural.hpp"

namespace fibgray {

NonMonotonicSequence::NonMonotonicSequence(std::size_t index,
                                           const std::string& detail)
    : Error("sequence is not strictly increasing at index " +
            std::to_string(index) + ": " + detail),
      index_(index) {}

DigitOutOfRange::DigitOutOfRange(std::size_t index, std::size_t position,
                                 std::uint64_t digit, std::uint64_t bound)
    : Error("digit " + std::to_string(digit) + " at position " +
            std::to_string(position) + " (weight index " +
            std::to_string(index) + ") exceeds bound " +
            std::to_string(bound)),
      index_(index),
      position_(position),
      digit_(digit),
      bound_(bound) {}

TooLong::TooLong(std::size_t length, std::size_t target)
    : Error("string of length " + std::to_string(length) +
            " does not fit in " + std::to_string(target) + " digits") {}

NonBinaryDigit::NonBinaryDigit(std::size_t position)
    : Error("non-binary digit at position " + std::to_string(position)),
      position_(position) {}

NonBinaryValue::NonBinaryValue(std::size_t position)
    : Error("inversion array value at position " + std::to_string(position) +
            " is not 0 or 1"),
      position_(position) {}

LengthMismatch::LengthMismatch(std::size_t lhs, std::size_t rhs)
    : Error("length mismatch: " + std::to_string(lhs) + " vs " +
            std::to_string(rhs)) {}

EmptyPermutation::EmptyPermutation()
    : Error("operation requires a non-empty permutation") {}

SizeGuardExceeded::SizeGuardExceeded(const std::string& what,
                                     std::string requested,
                                     std::uint64_t limit)
    : Error(what + ": " + requested + " exceeds size guard " +
            std::to_string(limit)),
      requested_(std::move(requested)),
      limit_(limit) {}

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ParseError("not a non-negative decimal integer: '" +
                       std::string(text) + "'");
    }
  }
  // cpp_int treats a leading 0 as an octal prefix.
  const auto first = text.find_first_not_of('0');
  if (first == std::string_view::npos) return Natural(0);
  return Natural(std::string(text.substr(first)));
}

std::string to_string(const Natural& n) { return n.str(); }

}  // namespace fibgray
