#pragma once

#include <cstdint>

namespace fibgray {

/// Budgets for eager materialization and brute-force enumeration.
struct SizeGuard {
  static constexpr std::uint64_t kDefaultMaxElements = std::uint64_t{1} << 22;
  static constexpr std::uint64_t kDefaultMaxPermutations = 362880;  // 9!
  static constexpr std::uint64_t kDefaultMaxSubsequences = std::uint64_t{1} << 24;
  static constexpr std::uint64_t kDefaultMaxSearchSpace = std::uint64_t{1} << 28;

  /// Largest list or set built eagerly (strings, permutations).
  std::uint64_t max_elements = kDefaultMaxElements;
  /// Largest m! enumerated by the permutation oracle.
  std::uint64_t max_permutations = kDefaultMaxPermutations;
  /// Largest C(n, l) the naive pattern matcher will search.
  std::uint64_t max_subsequences = kDefaultMaxSubsequences;
  /// Largest candidate count a brute-force digit enumeration will visit.
  std::uint64_t max_search_space = kDefaultMaxSearchSpace;
  /// Skip the element/permutation budgets entirely.
  bool force = false;

  bool allows_elements(std::uint64_t n) const noexcept {
    return force || n <= max_elements;
  }
  bool allows_permutations(std::uint64_t n) const noexcept {
    return force || n <= max_permutations;
  }
};

}  // namespace fibgray
