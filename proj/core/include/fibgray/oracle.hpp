#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fibgray/basis.hpp"
#include "fibgray/digit_string.hpp"
#include "fibgray/perm.hpp"
#include "fibgray/size_guard.hpp"

namespace fibgray {

/// Brute-force reference implementations. Nothing here reuses the
/// constructive recursions or the codec; the only shared inputs are basis
/// terms and the naive pattern matcher.

enum class OracleStatus { Agree, Disagree };

struct OracleReport {
  std::string check;
  std::string params;
  OracleStatus status = OracleStatus::Agree;
  /// Size of the object examined (valid strings, set size, list length...).
  std::uint64_t count = 0;
  std::optional<std::string> counterexample;

  bool agree() const noexcept { return status == OracleStatus::Agree; }

  static OracleReport agreed(std::string check, std::string params,
                             std::uint64_t count);
  static OracleReport disagreed(std::string check, std::string params,
                                std::uint64_t count, std::string counterexample);
};

std::ostream& operator<<(std::ostream& os, const OracleReport& r);

inline constexpr std::size_t kMaxUniquenessLength = 14;
inline constexpr std::size_t kMaxOracleStringLength = 22;
inline constexpr std::size_t kMaxOraclePermLength = 9;

/// Enumerates every digit string of length m (shorter strings are their
/// zero-padded forms) with each digit inside its per-position bound, keeps
/// those whose prefix sums satisfy sum_{j<=i} d_j a_j < a_{i+1}, and checks the
/// values hit 0 .. a_m - 1 exactly once. `count` is the number kept.
OracleReport oracle_unique_representation(const NumerationBasis& basis,
                                          std::size_t m,
                                          const SizeGuard& guard = {});

/// Every length-m binary string without k consecutive 1s, lexicographic.
std::vector<DigitString> oracle_filter_strings(unsigned k, std::size_t m,
                                               const SizeGuard& guard = {});

/// Every permutation of length m avoiding 321, 312 and 23...(k+1)1, found by
/// filtering all m! permutations with contains_pattern. Lexicographic.
std::vector<Permutation> oracle_filter_perms(unsigned k, std::size_t m,
                                             const SizeGuard& guard = {});

/// Compares two collections as sets (sorted copies). Duplicates in either
/// side count as a disagreement.
template <class T, class Render>
OracleReport compare_as_sets(std::string check, std::string params,
                             std::vector<T> expected, std::vector<T> actual,
                             Render render);

OracleReport compare_string_sets(std::string check, std::string params,
                                 std::vector<DigitString> expected,
                                 std::vector<DigitString> actual);
OracleReport compare_perm_sets(std::string check, std::string params,
                               std::vector<Permutation> expected,
                               std::vector<Permutation> actual);

}  // namespace fibgray

#include "fibgray/detail/oracle_impl.hpp"
