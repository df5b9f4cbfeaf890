#include "fibgray/perm.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "fibgray/errors.hpp"
#include "fibgray/graycode.hpp"
#include "fibgray/language.hpp"
#include "reference.hpp"

namespace fibgray {
namespace {

Permutation P(std::string_view text) { return Permutation::parse(text); }

std::vector<std::string> Texts(const std::vector<Permutation>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_text());
  return out;
}

using Strings = std::vector<std::string>;

TEST(PermTest, PermutationValidation) {
  EXPECT_NO_THROW(P("3142"));
  EXPECT_THROW(Permutation({1, 1}), InvalidPermutation);
  EXPECT_THROW(Permutation({0, 1}), InvalidPermutation);
  EXPECT_THROW(Permutation({1, 3}), InvalidPermutation);
  EXPECT_TRUE(Permutation{}.empty());
  EXPECT_EQ(Permutation::parse("10 2 1 3 4 5 6 7 8 9").to_text(), "10 2 1 3 4 5 6 7 8 9");
}

TEST(PermTest, InversionArrayGolden) {
  EXPECT_EQ(inversion_array(P("123")).to_digits().to_text(), "00");
  EXPECT_EQ(inversion_array(P("231")).to_digits().to_text(), "11");
  EXPECT_EQ(inversion_array(P("213")).to_digits().to_text(), "10");
  EXPECT_EQ(inversion_array(P("321")).to_digits().to_text(), "21");
  EXPECT_EQ(inversion_array(P("1")).size(), 0u);
  EXPECT_THROW(inversion_array(Permutation{}), EmptyPermutation);
}

TEST(PermTest, PermFromStringGolden) {
  EXPECT_EQ(perm_from_string(DigitString::parse("10")), P("213"));
  EXPECT_EQ(perm_from_string(DigitString::parse("00")), P("123"));
  EXPECT_EQ(perm_from_string(DigitString::parse("11")), P("231"));
  EXPECT_EQ(perm_from_string(DigitString{}), P("1"));
  EXPECT_THROW(perm_from_string(DigitString::parse("020")), NonBinaryValue);
}

TEST(PermTest, StringFromPermGolden) {
  EXPECT_EQ(string_from_perm(P("213")).to_digits().to_text(), "10");
  EXPECT_EQ(string_from_perm(P("123")).to_digits().to_text(), "00");
  EXPECT_EQ(string_from_perm(P("132")).to_digits().to_text(), "01");
}

TEST(PermTest, ContainsPattern) {
  EXPECT_TRUE(contains_pattern(P("231"), P("231")));
  EXPECT_FALSE(contains_pattern(P("123"), P("321")));
  EXPECT_TRUE(contains_pattern(P("3142"), P("312")));
  EXPECT_FALSE(contains_pattern(P("12"), P("123")));
  EXPECT_TRUE(contains_pattern(P("1"), Permutation{}));
  EXPECT_TRUE(contains_pattern(P("25314"), P("213")));
  EXPECT_FALSE(contains_pattern(P("2413"), P("321")));
}

TEST(PermTest, ContainsPatternAgreesWithCombinationScan) {
  // Compare against a plain scan of every index combination.
  auto brute = [](const Permutation& p, const Permutation& q) {
    const std::size_t n = p.size(), l = q.size();
    std::vector<bool> mask(n, false);
    std::fill(mask.end() - static_cast<std::ptrdiff_t>(l), mask.end(), true);
    do {
      std::vector<Entry> sub;
      for (std::size_t i = 0; i < n; ++i) if (mask[i]) sub.push_back(p[i]);
      bool iso = true;
      for (std::size_t a = 0; a < l && iso; ++a)
        for (std::size_t b = 0; b < l && iso; ++b) iso = (sub[a] < sub[b]) == (q[a] < q[b]);
      if (iso) return true;
    } while (std::next_permutation(mask.begin(), mask.end()));
    return false;
  };
  std::vector<Entry> e{1, 2, 3, 4, 5, 6};
  const std::vector<Permutation> patterns{P("321"), P("312"), P("2341"), P("132"), P("2413")};
  do {
    const Permutation p(e);
    for (const auto& q : patterns) ASSERT_EQ(contains_pattern(p, q), brute(p, q)) << p << " " << q;
  } while (std::next_permutation(e.begin(), e.end()));
}

TEST(PermTest, ContainsPatternSizeGuard) {
  EXPECT_THROW(contains_pattern(Permutation::identity(14), Permutation::identity(13)),
               SizeGuardExceeded);
  SizeGuard tight;
  tight.max_subsequences = 10;
  EXPECT_THROW(contains_pattern(Permutation::identity(8), P("321"), tight), SizeGuardExceeded);
  EXPECT_NO_THROW(contains_pattern(Permutation::identity(5), P("321"), tight));
}

TEST(PermTest, PatternsAndClassMembership) {
  EXPECT_EQ(staircase_pattern(2), P("231"));
  EXPECT_EQ(staircase_pattern(4), P("23451"));
  EXPECT_FALSE(in_class(P("231"), 2));
  EXPECT_TRUE(in_class(P("231"), 3));
  for (std::size_t m = 1; m <= 10; ++m)
    for (unsigned k = 2; k <= 5; ++k) EXPECT_TRUE(in_class(Permutation::identity(m), k));
  EXPECT_FALSE(in_class(P("321"), 5));
}

TEST(PermTest, ShiftUp) {
  EXPECT_EQ(shift_up(P("12"), 1), (std::vector<Entry>{2, 3}));
  EXPECT_TRUE(shift_up(Permutation{}, 5).empty());
  EXPECT_EQ(shift_up(P("21"), 2), (std::vector<Entry>{4, 3}));
  EXPECT_EQ(concat_shifted(P("21"), P("12")), P("2134"));
}

TEST(PermTest, PermSetGolden) {
  EXPECT_EQ(Texts(perm_set(2, 3)), (Strings{"123", "132", "213"}));
  EXPECT_EQ(Texts(perm_set(2, 1)), Strings{"1"});
  auto k3 = Texts(perm_set(3, 3));
  std::sort(k3.begin(), k3.end());
  EXPECT_EQ(k3, (Strings{"123", "132", "213", "231"}));
  EXPECT_EQ(perm_set(2, 0).size(), 1u);
  EXPECT_TRUE(perm_set(2, 0).front().empty());
}

TEST(PermTest, PermSetCardinality) {
  for (unsigned k = 2; k <= 5; ++k) {
    const auto f = ref::kbonacci(static_cast<int>(k), 15);
    for (std::size_t m = 1; m <= 15; ++m) {
      EXPECT_EQ(perm_set(k, m).size(), static_cast<std::size_t>(f[m - 1])) << k << "," << m;
      EXPECT_EQ(perm_class_count(k, m), static_cast<std::uint64_t>(f[m - 1]));
    }
  }
}

TEST(PermTest, ClassCharacterizationByPatterns) {
  for (unsigned k = 2; k <= 4; ++k) {
    const auto patterns = avoidance_patterns(k);
    for (std::size_t m = 1; m <= 8; ++m) {
      std::vector<Entry> e(m);
      for (std::size_t i = 0; i < m; ++i) e[i] = static_cast<Entry>(i + 1);
      std::set<Permutation> by_patterns, by_inversions;
      do {
        const Permutation p(e);
        const bool avoids = std::none_of(patterns.begin(), patterns.end(),
                                         [&](const Permutation& q) { return contains_pattern(p, q); });
        if (avoids) by_patterns.insert(p);
        if (in_class(p, k)) by_inversions.insert(p);
      } while (std::next_permutation(e.begin(), e.end()));
      EXPECT_EQ(by_patterns, by_inversions) << k << "," << m;
      const auto set = perm_set(k, m);
      EXPECT_EQ(by_patterns, std::set<Permutation>(set.begin(), set.end()));
      const auto gray = gray_perms(k, m);
      EXPECT_EQ(by_patterns, std::set<Permutation>(gray.begin(), gray.end()));
    }
  }
}

TEST(PermTest, BijectionRoundTrip) {
  for (unsigned k = 2; k <= 4; ++k) {
    for (std::size_t m = 1; m <= 12; ++m) {
      for (const auto& s : language_by_recursion(k, m - 1).elements) {
        const Permutation p = perm_from_string(s);
        ASSERT_EQ(p.size(), m);
        ASSERT_EQ(inversion_array(p).to_digits(), s);
        ASSERT_EQ(string_from_perm(p).to_digits(), s);
        ASSERT_TRUE(in_class(p, k));
      }
    }
  }
}

TEST(PermTest, GrayPermsGolden) {
  EXPECT_EQ(Texts(gray_perms(2, 2)), (Strings{"12", "21"}));
  EXPECT_EQ(Texts(gray_perms(2, 3)), (Strings{"132", "123", "213"}));
  EXPECT_EQ(Texts(gray_perms(2, 1)), Strings{"1"});
  EXPECT_EQ(Texts(gray_perms(3, 3)), (Strings{"132", "123", "213", "231"}));
}

TEST(PermTest, GrayPermsAdjacentTranspositionsAndSeams) {
  for (unsigned k = 2; k <= 4; ++k) {
    for (std::size_t m = 1; m <= 12; ++m) {
      const auto list = gray_perms(k, m);
      for (std::size_t i = 1; i < list.size(); ++i) {
        const auto& a = list[i - 1];
        const auto& b = list[i];
        const auto delta = adjacent_transposition_delta(a, b);
        ASSERT_TRUE(delta.has_value()) << a << " -> " << b;
        const auto block = [](const Permutation& p) {
          return static_cast<std::size_t>(std::find(p.begin(), p.end(), 1u) - p.begin()) + 1;
        };
        if (block(a) != block(b)) {
          const std::size_t j = block(b);
          ASSERT_EQ(block(a) + 1, j);
          const std::set<Entry> swapped{a[*delta - 1], a[*delta]};
          ASSERT_EQ(swapped, (std::set<Entry>{1, static_cast<Entry>(j)}));
        }
      }
      if (m >= 2) {
        const auto prev = gray_perms(k, m - 1);
        EXPECT_EQ(list.front(), concat_shifted(P("1"), prev.back()));
      }
    }
  }
}

TEST(PermTest, OrderTransportOntoStringGrayCode) {
  for (unsigned k = 2; k <= 3; ++k) {
    for (std::size_t m = 1; m <= 10; ++m) {
      std::vector<DigitString> mapped;
      for (const auto& p : gray_perms(k, m)) mapped.push_back(string_from_perm(p).to_digits());
      std::vector<DigitString> strings;
      for (GrayCursor c = gray_language(k, m - 1); !c.done(); c.advance()) strings.push_back(c.current());
      EXPECT_EQ(mapped, strings) << k << "," << m;
    }
  }
}

TEST(PermTest, CursorMatchesEagerAndReference) {
  for (unsigned k = 2; k <= 4; ++k) {
    for (std::size_t m = 0; m <= 11; ++m) {
      std::vector<Permutation> drained;
      PermGrayCursor c(k, m);
      while (auto p = c.next()) drained.push_back(*p);
      EXPECT_EQ(drained, gray_perms(k, m));
      std::vector<ref::Perm> expected = ref::gray_perms(static_cast<int>(k), static_cast<int>(m));
      ASSERT_EQ(drained.size(), expected.size());
      for (std::size_t i = 0; i < drained.size(); ++i) {
        ASSERT_TRUE(std::equal(drained[i].begin(), drained[i].end(), expected[i].begin(),
                               expected[i].end()));
      }
    }
  }
}

TEST(PermTest, AdjacentTranspositionDelta) {
  EXPECT_EQ(adjacent_transposition_delta(P("132"), P("123")), std::optional<std::size_t>(2));
  EXPECT_EQ(adjacent_transposition_delta(P("123"), P("123")), std::nullopt);
  EXPECT_EQ(adjacent_transposition_delta(P("123"), P("321")), std::nullopt);
  EXPECT_EQ(adjacent_transposition_delta(P("1234"), P("2143")), std::nullopt);
  EXPECT_THROW(adjacent_transposition_delta(P("12"), P("123")), LengthMismatch);
}

}  // namespace
}  // namespace fibgray
