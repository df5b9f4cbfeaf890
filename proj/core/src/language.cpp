#include "fibgray/language.hpp"

#include <algorithm>
#include <limits>

#include "fibgray/codec.hpp"
#include "fibgray/errors.hpp"

namespace fibgray {
namespace {

std::uint64_t pow2_count(std::size_t m) {
  return m >= 64 ? std::numeric_limits<std::uint64_t>::max()
                 : std::uint64_t{1} << m;
}

void require_elements(const SizeGuard& guard, std::uint64_t n,
                      const char* what) {
  if (!guard.allows_elements(n)) {
    throw SizeGuardExceeded(what, std::to_string(n) + " elements",
                            guard.max_elements);
  }
}

// 1^ones 0, or 1^ones when `zero` is false.
std::vector<Digit> ones_then_zero(std::size_t ones, bool zero = true) {
  std::vector<Digit> p(ones, 1);
  if (zero) p.push_back(0);
  return p;
}

void append_prefixed(std::vector<DigitString>& out,
                     const std::vector<Digit>& prefix,
                     const std::vector<DigitString>& block) {
  for (const auto& s : block) out.push_back(s.prefixed(prefix));
}

std::vector<DigitString> binary_level(std::size_t m) {
  std::vector<DigitString> level{DigitString{}};
  for (std::size_t len = 1; len <= m; ++len) {
    std::vector<DigitString> next;
    next.reserve(level.size() * 2);
    for (Digit b : {Digit{0}, Digit{1}}) {
      const std::vector<Digit> prefix{b};
      append_prefixed(next, prefix, level);
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<DigitString> LanguageSet::sorted() const {
  std::vector<DigitString> out = elements;
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t kbonacci_count(unsigned k, std::size_t m) {
  return saturating_u64(NumerationBasis(KBonacci{k}).term(m));
}

LanguageSet language_by_counting(const NumerationBasis& basis, std::size_t m,
                                 const SizeGuard& guard) {
  const Natural& size = basis.term(m);
  require_elements(guard, saturating_u64(size), "language_by_counting");

  LanguageSet out;
  out.length = m;
  out.provenance = Provenance::ByCounting;
  const auto n = static_cast<std::uint64_t>(size);
  out.elements.reserve(n);
  for (std::uint64_t l = 0; l < n; ++l) {
    out.elements.push_back(pad(encode(basis, Natural(l)), m));
  }
  return out;
}

LanguageSet language_by_recursion(unsigned k, std::size_t m,
                                  const SizeGuard& guard) {
  validate(KBonacci{k});
  require_elements(guard, kbonacci_count(k, m), "language_by_recursion");

  std::vector<std::vector<DigitString>> levels;
  levels.reserve(m + 1);
  for (std::size_t len = 0; len <= m; ++len) {
    if (len < k) {
      levels.push_back(binary_level(len));
      continue;
    }
    std::vector<DigitString> level;
    for (std::size_t j = 1; j <= k; ++j) {
      append_prefixed(level, ones_then_zero(j - 1), levels[len - j]);
    }
    levels.push_back(std::move(level));
  }

  LanguageSet out;
  out.length = m;
  out.provenance = Provenance::ByRecursion;
  out.elements = std::move(levels[m]);
  return out;
}

LanguageSet binary_strings(std::size_t m, const SizeGuard& guard) {
  require_elements(guard, pow2_count(m), "binary_strings");
  LanguageSet out;
  out.length = m;
  out.provenance = Provenance::ByRecursion;
  out.elements = binary_level(m);
  return out;
}

LanguageSet binary_strings_full_history(std::size_t m, const SizeGuard& guard) {
  require_elements(guard, pow2_count(m), "binary_strings_full_history");
  std::vector<std::vector<DigitString>> levels;
  levels.reserve(m + 1);
  levels.push_back({DigitString{}});
  for (std::size_t len = 1; len <= m; ++len) {
    std::vector<DigitString> level;
    for (std::size_t j = 1; j <= len; ++j) {
      append_prefixed(level, ones_then_zero(j - 1), levels[len - j]);
    }
    level.emplace_back(ones_then_zero(len, false));
    levels.push_back(std::move(level));
  }
  LanguageSet out;
  out.length = m;
  out.provenance = Provenance::ByRecursion;
  out.elements = std::move(levels[m]);
  return out;
}

bool avoids_ones_run(const DigitString& s, unsigned k) {
  if (k < 1) throw DomainError("avoids_ones_run requires k >= 1");
  unsigned run = 0;
  bool avoids = true;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] > 1) throw NonBinaryDigit(j);
    run = s[j] == 1 ? run + 1 : 0;
    if (run >= k) avoids = false;
  }
  return avoids;
}

}  // namespace fibgray
