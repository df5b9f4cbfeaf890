#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fibgray/detail/block_walker.hpp"
#include "fibgray/digit_string.hpp"
#include "fibgray/size_guard.hpp"

namespace fibgray {

using Entry = std::uint32_t;

/// A bijection on {1, ..., m} stored as pi_1 ... pi_m (ε when m = 0).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless the entries are exactly 1..m.
  explicit Permutation(std::vector<Entry> entries);
  Permutation(std::initializer_list<Entry> entries)
      : Permutation(std::vector<Entry>(entries)) {}

  static Permutation identity(std::size_t m);
  /// Parses "231" (one digit per entry) or "2 3 1" / "2,3,1".
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// 0-based access: operator[](i) is pi_{i+1}.
  Entry operator[](std::size_t i) const noexcept { return entries_[i]; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// Entries concatenated for m <= 9, space separated above.
  std::string to_text() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) noexcept {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// v_1 ... v_{m-1}, v_i = #{ j > i : pi_j < pi_i }.
struct InversionArray {
  std::vector<std::uint32_t> values;

  std::size_t size() const noexcept { return values.size(); }
  DigitString to_digits() const;
  static InversionArray from_digits(const DigitString& s);
  friend bool operator==(const InversionArray&, const InversionArray&) = default;
};

/// Throws EmptyPermutation for m = 0.
InversionArray inversion_array(const Permutation& p);

/// Inverse of the inversion-array map on 1^k-avoiding binary arrays: append
/// a 0, let i_1 < ... < i_r be the zero positions, then pi_{i_1} = 1,
/// pi_{i_{j+1}} = i_j + 1 and pi_i = i + 1 elsewhere. Throws NonBinaryValue.
Permutation perm_from_string(const InversionArray& v);
Permutation perm_from_string(const DigitString& s);

/// v_i = 0 iff pi_i <= i. Only meaningful inside the avoidance class, where
/// it agrees with inversion_array.
InversionArray string_from_perm(const Permutation& p);

/// True iff some subsequence of `p` is order-isomorphic to `pattern`.
/// Exhaustive over subsequences with prefix pruning; throws SizeGuardExceeded
/// when the pattern is longer than 12 or C(|p|, |pattern|) exceeds the
/// guard's subsequence budget.
bool contains_pattern(const Permutation& p, const Permutation& pattern,
                      const SizeGuard& guard = {});

/// 2 3 ... (k+1) 1.
Permutation staircase_pattern(unsigned k);

/// 321, 312 and 23...(k+1)1.
std::vector<Permutation> avoidance_patterns(unsigned k);

/// p avoids 321, 312 and 23...(k+1)1, decided through its inversion array.
bool in_class(const Permutation& p, unsigned k);

/// Every entry of `p` increased by q.
std::vector<Entry> shift_up(const Permutation& p, Entry q);
std::vector<Entry> shift_up(std::span<const Entry> p, Entry q);

/// rho·(pi ↑ |rho|).
Permutation concat_shifted(const Permutation& rho, const Permutation& pi);

/// S_0 = {ε}; S_m = 1·(S_{m-1}↑1) ∪ 21·(S_{m-2}↑2) ∪ ... ∪ 23...k1·(S_{m-k}↑k),
/// blocks with negative length omitted. Recursion order.
std::vector<Permutation> perm_set(unsigned k, std::size_t m,
                                  const SizeGuard& guard = {});

/// The adjacent-transposition Gray code: the same blocks as perm_set, each
/// sublist reversed. Built eagerly.
std::vector<Permutation> gray_perms(unsigned k, std::size_t m,
                                    const SizeGuard& guard = {});

/// 1-based i such that b equals a with positions i and i+1 swapped.
/// Throws LengthMismatch.
std::optional<std::size_t> adjacent_transposition_delta(const Permutation& a,
                                                        const Permutation& b);

/// f_{m-1}^(k) for m >= 1, 1 for m = 0 (saturating).
std::uint64_t perm_class_count(unsigned k, std::size_t m);

namespace detail {

struct PermGrammar {
  using value_type = Entry;
  unsigned k = 2;

  std::size_t block_count(std::size_t level) const noexcept {
    return std::min<std::size_t>(k, level);
  }
  Block block(std::size_t level, std::size_t b) const noexcept {
    return {b + 1, level - (b + 1), true};
  }
  void write_prefix(std::span<Entry> out, std::size_t offset, std::size_t,
                    std::size_t b) const noexcept {
    const auto base = static_cast<Entry>(offset);
    for (std::size_t i = 0; i < b; ++i) out[i] = base + static_cast<Entry>(i) + 2;
    out[b] = base + 1;
  }
};

}  // namespace detail

/// Lazy counterpart of gray_perms; single consumer.
class PermGrayCursor {
 public:
  PermGrayCursor(unsigned k, std::size_t m);

  bool done() const noexcept { return walker_.done(); }
  std::span<const Entry> current_entries() const noexcept {
    return walker_.current();
  }
  Permutation current() const;
  void advance() { walker_.advance(); }
  std::optional<Permutation> next();
  std::uint64_t emitted() const noexcept { return walker_.emitted(); }

 private:
  detail::BlockWalker<detail::PermGrammar> walker_;
};

}  // namespace fibgray
