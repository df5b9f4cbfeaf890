#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <string>
#include <variant>

#include "fibgray/natural.hpp"

namespace fibgray {

/// k-generalized Fibonacci numbers: 2^l for l < k, then the sum of the k
/// preceding terms.
struct KBonacci {
  unsigned k;
  friend bool operator==(const KBonacci&, const KBonacci&) = default;
};

/// 1, 2, 5, 12, 29, ...  (a_m = 2 a_{m-1} + a_{m-2})
struct Pell {
  friend bool operator==(const Pell&, const Pell&) = default;
};

/// a_m = 2^m
struct PowersOfTwo {
  friend bool operator==(const PowersOfTwo&, const PowersOfTwo&) = default;
};

/// a_0 = 1, a_1 = k, a_m = k a_{m-1} + h a_{m-2}; requires k >= h > 0.
struct LinearPlus {
  unsigned k;
  unsigned h;
  friend bool operator==(const LinearPlus&, const LinearPlus&) = default;
};

/// a_0 = 1, a_1 = k, a_m = k a_{m-1} - h a_{m-2}; requires k > h > 0.
struct LinearMinus {
  unsigned k;
  unsigned h;
  friend bool operator==(const LinearMinus&, const LinearMinus&) = default;
};

using SequenceSpec =
    std::variant<KBonacci, Pell, PowersOfTwo, LinearPlus, LinearMinus>;

/// Throws InvalidSpec when the parameters violate the variant's constraints.
void validate(const SequenceSpec& spec);

/// Short stable identifier, e.g. "pell" or "kbonacci(3)".
std::string describe(const SequenceSpec& spec);

/// A strictly increasing integer sequence a_0 = 1 < a_1 < ... used as
/// positional weights.
///
/// Terms are computed on demand and cached in an append-only store, so a
/// reference returned by term() stays valid for the lifetime of the basis.
/// Concurrent readers are safe: growth is serialized behind a writer lock and
/// every extension checks strict monotonicity, throwing NonMonotonicSequence
/// on violation.
class NumerationBasis {
 public:
  explicit NumerationBasis(SequenceSpec spec);

  NumerationBasis(const NumerationBasis& other);
  NumerationBasis& operator=(const NumerationBasis& other);
  NumerationBasis(NumerationBasis&& other) noexcept;
  NumerationBasis& operator=(NumerationBasis&& other) noexcept;
  ~NumerationBasis() = default;

  const SequenceSpec& spec() const noexcept { return spec_; }
  std::string tag() const { return describe(spec_); }

  /// a_i.
  const Natural& term(std::size_t i) const;

  /// n with a_n <= value < a_{n+1}. Throws DomainError for value = 0.
  std::size_t index_of_largest_leq(const Natural& value) const;

  /// floor((a_{i+1} - 1) / a_i), the largest digit allowed at weight i.
  std::uint64_t digit_bound(std::size_t i) const;

  /// Largest digit_bound over positions 0..m-1; 0 when m = 0.
  std::uint64_t alphabet_for_length(std::size_t m) const;

  /// Number of terms currently cached.
  std::size_t cached_terms() const;

 private:
  void extend_to(std::size_t i) const;
  Natural next_term() const;

  SequenceSpec spec_;
  mutable std::deque<Natural> terms_;
  mutable std::shared_mutex mutex_;
};

/// a_m as a 64-bit value when it fits, otherwise UINT64_MAX. Handy for
/// comparing against size budgets.
std::uint64_t saturating_u64(const Natural& n) noexcept;

}  // namespace fibgray
