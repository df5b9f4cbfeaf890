#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fibgray/detail/block_walker.hpp"
#include "fibgray/digit_string.hpp"
#include "fibgray/size_guard.hpp"

namespace fibgray {

namespace detail {

/// k = 0 selects the plain reflected code C_m; k >= 2 the 1^k-avoiding code,
/// which coincides with C_m below length k.
struct StringGrammar {
  using value_type = Digit;
  unsigned k = 0;

  bool reflected_regime(std::size_t level) const noexcept {
    return k == 0 || level < k;
  }
  std::size_t block_count(std::size_t level) const noexcept {
    if (level == 0) return 0;
    return reflected_regime(level) ? 2 : k;
  }
  Block block(std::size_t level, std::size_t b) const noexcept {
    if (reflected_regime(level)) return {1, level - 1, b == 0};
    return {b + 1, level - (b + 1), true};
  }
  void write_prefix(std::span<Digit> out, std::size_t, std::size_t level,
                    std::size_t b) const noexcept {
    if (reflected_regime(level)) {
      out[0] = static_cast<Digit>(b);
      return;
    }
    for (std::size_t i = 0; i < b; ++i) out[i] = 1;
    out[b] = 0;
  }
};

}  // namespace detail

/// Single-consumer cursor over a Gray-ordered string list. Memory is linear
/// in the string length, independent of the list length.
class GrayCursor {
 public:
  bool done() const noexcept { return walker_.done(); }
  std::span<const Digit> current_digits() const noexcept {
    return walker_.current();
  }
  DigitString current() const;
  void advance() { walker_.advance(); }

  /// Returns the current element and advances; nullopt once exhausted.
  std::optional<DigitString> next();

  std::uint64_t emitted() const noexcept { return walker_.emitted(); }
  std::size_t length() const noexcept { return walker_.current().size(); }

 private:
  friend GrayCursor brgc_cursor(std::size_t m);
  friend GrayCursor gray_language(unsigned k, std::size_t m);
  GrayCursor(unsigned k, std::size_t m) : walker_(detail::StringGrammar{k}, m) {}

  detail::BlockWalker<detail::StringGrammar> walker_;
};

/// Largest m for which the eager reflected-code lists are offered.
inline constexpr std::size_t kMaxEagerBrgcLength = 20;

/// C_0 = (ε), C_m = 0·rev(C_{m-1}) ∘ 1·C_{m-1}. Throws SizeGuardExceeded for
/// m > kMaxEagerBrgcLength.
std::vector<DigitString> brgc_list(std::size_t m);

/// C_m = 0·rev C_{m-1} ∘ 10·rev C_{m-2} ∘ ... ∘ 1^{m-1}0·rev C_0 ∘ 1^m.
std::vector<DigitString> brgc_full_history_list(std::size_t m);

GrayCursor brgc_cursor(std::size_t m);

/// Cursor over the Gray code for 1^k-avoiding strings of length m: C_m for
/// m < k, else 0·rev L_{m-1} ∘ 10·rev L_{m-2} ∘ ... ∘ 1^{k-1}0·rev L_{m-k}.
/// Throws InvalidSpec for k < 2.
GrayCursor gray_language(unsigned k, std::size_t m);

/// The same list built eagerly by materializing and reversing sublists.
std::vector<DigitString> gray_language_list(unsigned k, std::size_t m,
                                            const SizeGuard& guard = {});

/// Number of differing positions. Throws LengthMismatch.
std::size_t hamming(const DigitString& a, const DigitString& b);
std::size_t hamming(std::span<const Digit> a, std::span<const Digit> b);

}  // namespace fibgray
