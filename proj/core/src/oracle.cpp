#include "fibgray/oracle.hpp"

#include <algorithm>
#include <limits>

#include "fibgray/errors.hpp"

namespace fibgray {
namespace {

std::string digits_text(const std::vector<std::uint64_t>& low_first) {
  std::string out;
  bool dotted = std::any_of(low_first.begin(), low_first.end(),
                            [](std::uint64_t d) { return d > 9; });
  for (auto it = low_first.rbegin(); it != low_first.rend(); ++it) {
    if (dotted && !out.empty()) out.push_back('.');
    out += std::to_string(*it);
  }
  return out.empty() ? "ε" : out;
}

std::uint64_t factorial_saturating(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i)
      return std::numeric_limits<std::uint64_t>::max();
    f *= i;
  }
  return f;
}

}  // namespace

OracleReport OracleReport::agreed(std::string check, std::string params,
                                  std::uint64_t count) {
  return OracleReport{std::move(check), std::move(params), OracleStatus::Agree,
                      count, std::nullopt};
}

OracleReport OracleReport::disagreed(std::string check, std::string params,
                                     std::uint64_t count,
                                     std::string counterexample) {
  return OracleReport{std::move(check), std::move(params),
                      OracleStatus::Disagree, count, std::move(counterexample)};
}

std::ostream& operator<<(std::ostream& os, const OracleReport& r) {
  os << (r.agree() ? "agree" : "DISAGREE") << ' ' << r.check << " ["
     << r.params << "] count=" << r.count;
  if (r.counterexample) os << " counterexample: " << *r.counterexample;
  return os;
}

OracleReport oracle_unique_representation(const NumerationBasis& basis,
                                          std::size_t m,
                                          const SizeGuard& guard) {
  const std::string check = "unique_representation";
  const std::string params = basis.tag() + ", m=" + std::to_string(m);
  if (m > kMaxUniquenessLength) {
    throw SizeGuardExceeded(check, "length " + std::to_string(m),
                            kMaxUniquenessLength);
  }
  const std::uint64_t target = saturating_u64(basis.term(m));
  if (!guard.allows_elements(target)) {
    throw SizeGuardExceeded(check, "a_m = " + basis.term(m).str(),
                            guard.max_elements);
  }

  std::vector<std::uint64_t> weight(m + 1);
  for (std::size_t i = 0; i <= m; ++i) weight[i] = saturating_u64(basis.term(i));
  std::vector<std::uint64_t> bound(m);
  Natural space = 1;
  for (std::size_t i = 0; i < m; ++i) {
    bound[i] = (weight[i + 1] - 1) / weight[i];
    space *= bound[i] + 1;
  }
  if (!guard.force && space > guard.max_search_space) {
    throw SizeGuardExceeded(check, "search space too large",
                            guard.max_search_space);
  }

  // hits[v] remembers the first valid string decoding to v.
  std::vector<std::uint8_t> hits(target, 0);
  std::vector<std::uint64_t> d(m, 0);  // d[0] is the least significant digit
  std::uint64_t valid = 0;
  while (true) {
    std::uint64_t prefix = 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      prefix += d[i] * weight[i];
      ok = prefix < weight[i + 1];
    }
    if (ok) {
      ++valid;
      if (prefix >= target) {
        return OracleReport::disagreed(check, params, valid,
                                       digits_text(d) + " decodes past a_m");
      }
      if (hits[prefix]) {
        return OracleReport::disagreed(
            check, params, valid,
            "value " + std::to_string(prefix) + " represented twice, e.g. " +
                digits_text(d));
      }
      hits[prefix] = 1;
    }
    std::size_t i = 0;
    while (i < m && d[i] == bound[i]) d[i++] = 0;
    if (i == m) break;
    ++d[i];
  }
  for (std::uint64_t v = 0; v < target; ++v) {
    if (!hits[v]) {
      return OracleReport::disagreed(check, params, valid,
                                     "value " + std::to_string(v) +
                                         " has no representation");
    }
  }
  return OracleReport::agreed(check, params, valid);
}

std::vector<DigitString> oracle_filter_strings(unsigned k, std::size_t m,
                                               const SizeGuard& guard) {
  const std::uint64_t total = m >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                      : std::uint64_t{1} << m;
  if (m > 62 || !guard.allows_elements(total)) {
    throw SizeGuardExceeded("oracle_filter_strings",
                            std::to_string(total) + " strings",
                            guard.max_elements);
  }
  std::vector<DigitString> out;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Digit> s(m);
    unsigned run = 0;
    unsigned longest = 0;
    for (std::size_t j = 0; j < m; ++j) {
      s[j] = static_cast<Digit>((mask >> (m - 1 - j)) & 1u);
      run = s[j] ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    if (longest < k) out.emplace_back(std::move(s));
  }
  return out;
}

std::vector<Permutation> oracle_filter_perms(unsigned k, std::size_t m,
                                             const SizeGuard& guard) {
  const std::uint64_t total = factorial_saturating(m);
  if (!guard.allows_permutations(total)) {
    throw SizeGuardExceeded("oracle_filter_perms",
                            std::to_string(total) + " permutations",
                            guard.max_permutations);
  }
  const auto patterns = avoidance_patterns(k);
  std::vector<Entry> e(m);
  for (std::size_t i = 0; i < m; ++i) e[i] = static_cast<Entry>(i + 1);
  std::vector<Permutation> out;
  do {
    const Permutation p(e);
    bool avoids = true;
    for (const auto& pattern : patterns) {
      if (contains_pattern(p, pattern, guard)) {
        avoids = false;
        break;
      }
    }
    if (avoids) out.push_back(p);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

OracleReport compare_string_sets(std::string check, std::string params,
                                 std::vector<DigitString> expected,
                                 std::vector<DigitString> actual) {
  return compare_as_sets(std::move(check), std::move(params),
                         std::move(expected), std::move(actual),
                         [](const DigitString& s) {
                           return s.empty() ? std::string("ε") : s.to_text();
                         });
}

OracleReport compare_perm_sets(std::string check, std::string params,
                               std::vector<Permutation> expected,
                               std::vector<Permutation> actual) {
  return compare_as_sets(std::move(check), std::move(params),
                         std::move(expected), std::move(actual),
                         [](const Permutation& p) {
                           return p.empty() ? std::string("ε") : p.to_text();
                         });
}

}  // namespace fibgray
