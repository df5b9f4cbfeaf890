#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibgray {

using Digit = std::uint32_t;

/// Digits d_{m-1} ... d_0 stored most significant first, so index j in the
/// array carries weight a_{m-1-j}.
///
/// The basis tag is informational only and does not take part in comparison.
class DigitString {
 public:
  DigitString() = default;
  DigitString(std::initializer_list<Digit> digits) : digits_(digits) {}
  explicit DigitString(std::vector<Digit> digits, std::string basis_tag = {})
      : digits_(std::move(digits)), basis_tag_(std::move(basis_tag)) {}

  /// Parses text such as "1020". Text containing '.' is read as
  /// dot-separated multi-character digits ("1.12.0"). An empty view is ε.
  static DigitString parse(std::string_view text);

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  Digit operator[](std::size_t j) const noexcept { return digits_[j]; }
  Digit& operator[](std::size_t j) noexcept { return digits_[j]; }

  /// Digit carrying weight a_i (i counted from the right).
  Digit at_weight(std::size_t i) const noexcept {
    return digits_[digits_.size() - 1 - i];
  }

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::vector<Digit>& mutable_digits() noexcept { return digits_; }

  auto begin() const noexcept { return digits_.begin(); }
  auto end() const noexcept { return digits_.end(); }

  const std::string& basis_tag() const noexcept { return basis_tag_; }
  void set_basis_tag(std::string tag) { basis_tag_ = std::move(tag); }

  Digit max_digit() const noexcept;

  /// Digits 0-9 as single characters; if any digit exceeds 9 (or
  /// `force_dotted`), digits are rendered in decimal separated by '.'.
  std::string to_text(bool force_dotted = false) const;

  /// Prepends `prefix` (a concatenation such as 10·s).
  DigitString prefixed(std::span<const Digit> prefix) const;

  friend bool operator==(const DigitString& a, const DigitString& b) noexcept {
    return a.digits_ == b.digits_;
  }
  friend std::strong_ordering operator<=>(const DigitString& a,
                                          const DigitString& b) noexcept {
    return a.digits_ <=> b.digits_;
  }

 private:
  std::vector<Digit> digits_;
  std::string basis_tag_;
};

std::ostream& operator<<(std::ostream& os, const DigitString& s);

}  // namespace fibgray
