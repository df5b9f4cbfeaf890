#pragma once

#include <cstddef>
#include <vector>

#include "fibgray/basis.hpp"
#include "fibgray/digit_string.hpp"
#include "fibgray/size_guard.hpp"

namespace fibgray {

enum class Provenance { ByCounting, ByRecursion };

/// A finite set of equal-length digit strings, kept in construction order.
struct LanguageSet {
  std::size_t length = 0;
  std::vector<DigitString> elements;
  Provenance provenance = Provenance::ByCounting;

  std::size_t size() const noexcept { return elements.size(); }
  /// Elements in lexicographic order, for set comparison.
  std::vector<DigitString> sorted() const;
};

/// pad(encode(l), m) for l = 0 .. a_m - 1, in increasing l. Refuses a_m
/// beyond the guard's element budget.
LanguageSet language_by_counting(const NumerationBasis& basis, std::size_t m,
                                 const SizeGuard& guard = {});

/// B_m for m < k, otherwise 0·L_{m-1} ∪ 10·L_{m-2} ∪ ... ∪ 1^{k-1}0·L_{m-k}.
LanguageSet language_by_recursion(unsigned k, std::size_t m,
                                  const SizeGuard& guard = {});

/// All 2^m binary strings as 0·B_{m-1} ∪ 1·B_{m-1} (lexicographic).
LanguageSet binary_strings(std::size_t m, const SizeGuard& guard = {});

/// All 2^m binary strings via 0·B_{m-1} ∪ 10·B_{m-2} ∪ ... ∪ 1^{m-1}0·B_0 ∪ 1^m.
LanguageSet binary_strings_full_history(std::size_t m,
                                        const SizeGuard& guard = {});

/// True iff `s` has no run of k consecutive 1 digits. Throws NonBinaryDigit.
bool avoids_ones_run(const DigitString& s, unsigned k);

/// f_m^(k) as a 64-bit count, saturating.
std::uint64_t kbonacci_count(unsigned k, std::size_t m);

}  // namespace fibgray
