#include "fibgray/digit_string.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "fibgray/errors.hpp"

namespace fibgray {

DigitString DigitString::parse(std::string_view text) {
  std::vector<Digit> digits;
  if (text.find('.') == std::string_view::npos) {
    digits.reserve(text.size());
    for (std::size_t j = 0; j < text.size(); ++j) {
      const char c = text[j];
      if (c < '0' || c > '9') {
        throw ParseError("invalid digit '" + std::string(1, c) +
                         "' at position " + std::to_string(j));
      }
      digits.push_back(static_cast<Digit>(c - '0'));
    }
    return DigitString(std::move(digits));
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t dot = std::min(text.find('.', start), text.size());
    const std::string_view piece = text.substr(start, dot - start);
    Digit d = 0;
    const auto [ptr, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), d);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw ParseError("invalid dotted digit '" + std::string(piece) + "'");
    }
    digits.push_back(d);
    start = dot + 1;
  }
  return DigitString(std::move(digits));
}

Digit DigitString::max_digit() const noexcept {
  return digits_.empty() ? 0 : *std::max_element(digits_.begin(), digits_.end());
}

std::string DigitString::to_text(bool force_dotted) const {
  std::string out;
  if (!force_dotted && max_digit() <= 9) {
    out.reserve(digits_.size());
    for (Digit d : digits_) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  for (std::size_t j = 0; j < digits_.size(); ++j) {
    if (j) out.push_back('.');
    out += std::to_string(digits_[j]);
  }
  return out;
}

DigitString DigitString::prefixed(std::span<const Digit> prefix) const {
  std::vector<Digit> out;
  out.reserve(prefix.size() + digits_.size());
  out.insert(out.end(), prefix.begin(), prefix.end());
  out.insert(out.end(), digits_.begin(), digits_.end());
  return DigitString(std::move(out), basis_tag_);
}

std::ostream& operator<<(std::ostream& os, const DigitString& s) {
  return os << (s.empty() ? std::string("ε") : s.to_text());
}

}  // namespace fibgray
