#include "fibgray/graycode.hpp"

#include <algorithm>

#include "fibgray/basis.hpp"
#include "fibgray/errors.hpp"

namespace fibgray {
namespace {

using List = std::vector<DigitString>;

void require_eager_brgc(std::size_t m) {
  if (m > kMaxEagerBrgcLength) {
    throw SizeGuardExceeded("eager reflected Gray list",
                            "length " + std::to_string(m),
                            kMaxEagerBrgcLength);
  }
}

void append_reversed(List& out, const std::vector<Digit>& prefix,
                     const List& block) {
  for (auto it = block.rbegin(); it != block.rend(); ++it) {
    out.push_back(it->prefixed(prefix));
  }
}

void append_forward(List& out, const std::vector<Digit>& prefix,
                    const List& block) {
  for (const auto& s : block) out.push_back(s.prefixed(prefix));
}

std::vector<Digit> ones_then_zero(std::size_t ones) {
  std::vector<Digit> p(ones, 1);
  p.push_back(0);
  return p;
}

List eager_brgc(std::size_t m) {
  List level{DigitString{}};
  for (std::size_t len = 1; len <= m; ++len) {
    List next;
    next.reserve(level.size() * 2);
    append_reversed(next, {0}, level);
    append_forward(next, {1}, level);
    level = std::move(next);
  }
  return level;
}

}  // namespace

DigitString GrayCursor::current() const {
  const auto d = current_digits();
  return DigitString(std::vector<Digit>(d.begin(), d.end()));
}

std::optional<DigitString> GrayCursor::next() {
  if (done()) return std::nullopt;
  DigitString out = current();
  advance();
  return out;
}

std::vector<DigitString> brgc_list(std::size_t m) {
  require_eager_brgc(m);
  return eager_brgc(m);
}

std::vector<DigitString> brgc_full_history_list(std::size_t m) {
  require_eager_brgc(m);
  std::vector<List> levels;
  levels.reserve(m + 1);
  levels.push_back({DigitString{}});
  for (std::size_t len = 1; len <= m; ++len) {
    List level;
    for (std::size_t j = 1; j <= len; ++j) {
      append_reversed(level, ones_then_zero(j - 1), levels[len - j]);
    }
    level.emplace_back(std::vector<Digit>(len, 1));
    levels.push_back(std::move(level));
  }
  return std::move(levels[m]);
}

GrayCursor brgc_cursor(std::size_t m) { return GrayCursor(0, m); }

GrayCursor gray_language(unsigned k, std::size_t m) {
  validate(KBonacci{k});
  return GrayCursor(k, m);
}

std::vector<DigitString> gray_language_list(unsigned k, std::size_t m,
                                            const SizeGuard& guard) {
  validate(KBonacci{k});
  const std::uint64_t n = saturating_u64(NumerationBasis(KBonacci{k}).term(m));
  if (!guard.allows_elements(n)) {
    throw SizeGuardExceeded("gray_language_list", std::to_string(n) + " elements",
                            guard.max_elements);
  }
  std::vector<List> levels;
  levels.reserve(m + 1);
  for (std::size_t len = 0; len <= m; ++len) {
    if (len < k) {
      levels.push_back(eager_brgc(len));
      continue;
    }
    List level;
    for (std::size_t j = 1; j <= k; ++j) {
      append_reversed(level, ones_then_zero(j - 1), levels[len - j]);
    }
    levels.push_back(std::move(level));
  }
  return std::move(levels[m]);
}

std::size_t hamming(std::span<const Digit> a, std::span<const Digit> b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  std::size_t d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) d += a[j] != b[j];
  return d;
}

std::size_t hamming(const DigitString& a, const DigitString& b) {
  return hamming(a.digits(), b.digits());
}

}  // namespace fibgray
