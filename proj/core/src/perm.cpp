#include "fibgray/perm.hpp"

#include <charconv>
#include <limits>

#include "fibgray/basis.hpp"
#include "fibgray/errors.hpp"

namespace fibgray {
namespace {

constexpr std::size_t kMaxPatternLength = 12;

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  // C(n, i) * (n - i) / (i + 1) stays integral at every step.
  Natural acc = 1;
  for (std::uint64_t i = 0; i < r; ++i) acc = acc * (n - i) / (i + 1);
  return saturating_u64(acc);
}

// Places the t-th pattern element at some index >= from, checking the new
// element against every already chosen one.
bool extend_match(std::span<const Entry> text, std::span<const Entry> pattern,
                  std::vector<std::size_t>& chosen, std::size_t from) {
  const std::size_t t = chosen.size();
  if (t == pattern.size()) return true;
  const std::size_t remaining = pattern.size() - t;
  for (std::size_t idx = from; idx + remaining <= text.size(); ++idx) {
    bool consistent = true;
    for (std::size_t s = 0; s < t && consistent; ++s) {
      consistent = (text[chosen[s]] < text[idx]) == (pattern[s] < pattern[t]);
    }
    if (!consistent) continue;
    chosen.push_back(idx);
    if (extend_match(text, pattern, chosen, idx + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

Permutation block_prefix(std::size_t j) {
  std::vector<Entry> p;
  p.reserve(j);
  for (std::size_t i = 2; i <= j; ++i) p.push_back(static_cast<Entry>(i));
  p.push_back(1);
  return Permutation(std::move(p));
}

void require_class_budget(unsigned k, std::size_t m, const SizeGuard& guard,
                          const char* what) {
  validate(KBonacci{k});
  const std::uint64_t n = perm_class_count(k, m);
  if (!guard.allows_elements(n)) {
    throw SizeGuardExceeded(what, std::to_string(n) + " permutations",
                            guard.max_elements);
  }
}

std::vector<std::vector<Permutation>> build_levels(unsigned k, std::size_t m,
                                                   bool reflect) {
  std::vector<std::vector<Permutation>> levels;
  levels.reserve(m + 1);
  levels.push_back({Permutation{}});
  for (std::size_t len = 1; len <= m; ++len) {
    std::vector<Permutation> level;
    for (std::size_t j = 1; j <= std::min<std::size_t>(k, len); ++j) {
      const Permutation prefix = block_prefix(j);
      const auto& sub = levels[len - j];
      if (reflect) {
        for (auto it = sub.rbegin(); it != sub.rend(); ++it)
          level.push_back(concat_shifted(prefix, *it));
      } else {
        for (const auto& p : sub) level.push_back(concat_shifted(prefix, p));
      }
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace

Permutation::Permutation(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  std::vector<bool> seen(entries_.size() + 1, false);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry e = entries_[i];
    if (e == 0 || e > entries_.size() || seen[e]) {
      throw InvalidPermutation("entries are not a permutation of 1.." +
                               std::to_string(entries_.size()));
    }
    seen[e] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<Entry> e(m);
  for (std::size_t i = 0; i < m; ++i) e[i] = static_cast<Entry>(i + 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<Entry> entries;
  const bool separated = text.find_first_of(" ,") != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("invalid permutation entry");
      entries.push_back(static_cast<Entry>(c - '0'));
    }
    return Permutation(std::move(entries));
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    pos = text.find_first_not_of(" ,", pos);
    if (pos == std::string_view::npos) break;
    const std::size_t end = std::min(text.find_first_of(" ,", pos), text.size());
    Entry e = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, e);
    if (ec != std::errc{} || ptr != text.data() + end)
      throw ParseError("invalid permutation entry");
    entries.push_back(e);
    pos = end;
  }
  return Permutation(std::move(entries));
}

std::string Permutation::to_text() const {
  std::string out;
  const bool compact = entries_.size() <= 9;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i) out.push_back(' ');
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << (p.empty() ? std::string("ε") : p.to_text());
}

DigitString InversionArray::to_digits() const {
  return DigitString(std::vector<Digit>(values.begin(), values.end()));
}

InversionArray InversionArray::from_digits(const DigitString& s) {
  return InversionArray{std::vector<std::uint32_t>(s.begin(), s.end())};
}

InversionArray inversion_array(const Permutation& p) {
  if (p.empty()) throw EmptyPermutation();
  const std::size_t m = p.size();
  InversionArray v;
  v.values.resize(m - 1, 0);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) v.values[i] += p[j] < p[i];
  }
  return v;
}

Permutation perm_from_string(const InversionArray& v) {
  const std::size_t m = v.size() + 1;
  std::vector<Entry> pi(m);
  // Positions are 1-based; i_r = m always, from the appended 0.
  std::size_t previous_zero = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    const std::uint32_t value = i < m ? v.values[i - 1] : 0;
    if (value > 1) throw NonBinaryValue(i);
    if (value == 1) {
      pi[i - 1] = static_cast<Entry>(i + 1);
    } else {
      pi[i - 1] = previous_zero == 0 ? 1 : static_cast<Entry>(previous_zero + 1);
      previous_zero = i;
    }
  }
  return Permutation(std::move(pi));
}

Permutation perm_from_string(const DigitString& s) {
  return perm_from_string(InversionArray::from_digits(s));
}

InversionArray string_from_perm(const Permutation& p) {
  InversionArray v;
  if (p.empty()) return v;
  v.values.resize(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) v.values[i - 1] = p[i - 1] > i;
  return v;
}

bool contains_pattern(const Permutation& p, const Permutation& pattern,
                      const SizeGuard& guard) {
  if (pattern.size() > kMaxPatternLength) {
    throw SizeGuardExceeded("contains_pattern",
                            "pattern length " + std::to_string(pattern.size()),
                            kMaxPatternLength);
  }
  if (pattern.size() > p.size()) return false;
  const std::uint64_t space = binomial_saturating(p.size(), pattern.size());
  if (!guard.force && space > guard.max_subsequences) {
    throw SizeGuardExceeded("contains_pattern",
                            std::to_string(space) + " subsequences",
                            guard.max_subsequences);
  }
  std::vector<std::size_t> chosen;
  chosen.reserve(pattern.size());
  return extend_match(p.entries(), pattern.entries(), chosen, 0);
}

Permutation staircase_pattern(unsigned k) {
  if (k < 1) throw DomainError("staircase pattern requires k >= 1");
  return block_prefix(k + 1);
}

std::vector<Permutation> avoidance_patterns(unsigned k) {
  return {Permutation{3, 2, 1}, Permutation{3, 1, 2}, staircase_pattern(k)};
}

bool in_class(const Permutation& p, unsigned k) {
  const InversionArray v = inversion_array(p);
  unsigned run = 0;
  for (std::uint32_t value : v.values) {
    if (value > 1) return false;
    run = value == 1 ? run + 1 : 0;
    if (run >= k) return false;
  }
  return true;
}

std::vector<Entry> shift_up(std::span<const Entry> p, Entry q) {
  std::vector<Entry> out(p.begin(), p.end());
  for (Entry& e : out) e += q;
  return out;
}

std::vector<Entry> shift_up(const Permutation& p, Entry q) {
  return shift_up(p.entries(), q);
}

Permutation concat_shifted(const Permutation& rho, const Permutation& pi) {
  std::vector<Entry> out(rho.begin(), rho.end());
  out.reserve(rho.size() + pi.size());
  const auto shift = static_cast<Entry>(rho.size());
  for (Entry e : pi) out.push_back(e + shift);
  return Permutation(std::move(out));
}

std::uint64_t perm_class_count(unsigned k, std::size_t m) {
  if (m == 0) return 1;
  return saturating_u64(NumerationBasis(KBonacci{k}).term(m - 1));
}

std::vector<Permutation> perm_set(unsigned k, std::size_t m,
                                  const SizeGuard& guard) {
  require_class_budget(k, m, guard, "perm_set");
  return std::move(build_levels(k, m, false)[m]);
}

std::vector<Permutation> gray_perms(unsigned k, std::size_t m,
                                    const SizeGuard& guard) {
  require_class_budget(k, m, guard, "gray_perms");
  return std::move(build_levels(k, m, true)[m]);
}

std::optional<std::size_t> adjacent_transposition_delta(const Permutation& a,
                                                        const Permutation& b) {
  if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
  std::size_t i = 0;
  while (i < a.size() && a[i] == b[i]) ++i;
  if (i + 1 >= a.size()) return std::nullopt;
  if (a[i] != b[i + 1] || a[i + 1] != b[i]) return std::nullopt;
  for (std::size_t j = i + 2; j < a.size(); ++j) {
    if (a[j] != b[j]) return std::nullopt;
  }
  return i + 1;
}

PermGrayCursor::PermGrayCursor(unsigned k, std::size_t m)
    : walker_((validate(KBonacci{k}), detail::PermGrammar{k}), m) {}

Permutation PermGrayCursor::current() const {
  const auto e = current_entries();
  return Permutation(std::vector<Entry>(e.begin(), e.end()));
}

std::optional<Permutation> PermGrayCursor::next() {
  if (done()) return std::nullopt;
  Permutation out = current();
  advance();
  return out;
}

}  // namespace fibgray
