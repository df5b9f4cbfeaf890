#include "fibgray/language.hpp"

#include <set>

#include <gtest/gtest.h>

#include "fibgray/codec.hpp"
#include "fibgray/errors.hpp"
#include "reference.hpp"

namespace fibgray {
namespace {

std::vector<std::string> Texts(const std::vector<DigitString>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_text());
  return out;
}

std::vector<std::string> Texts(const LanguageSet& l) { return Texts(l.elements); }

using Strings = std::vector<std::string>;

TEST(LanguageTest, PellTables) {
  const NumerationBasis pell(Pell{});
  EXPECT_EQ(Texts(language_by_counting(pell, 0)), Strings{""});
  EXPECT_EQ(Texts(language_by_counting(pell, 1)), (Strings{"0", "1"}));
  EXPECT_EQ(Texts(language_by_counting(pell, 2)), (Strings{"00", "01", "10", "11", "20"}));
  EXPECT_EQ(Texts(language_by_counting(pell, 3)),
            (Strings{"000", "001", "010", "011", "020", "100", "101", "110", "111", "120",
                     "200", "201"}));
  EXPECT_EQ(language_by_counting(pell, 0).elements.front().size(), 0u);
}

TEST(LanguageTest, KBonacciCountingGolden) {
  EXPECT_EQ(Texts(language_by_counting(NumerationBasis(KBonacci{2}), 3)),
            (Strings{"000", "001", "010", "100", "101"}));
}

TEST(LanguageTest, RecursionGolden) {
  EXPECT_EQ(Texts(language_by_recursion(2, 2)), (Strings{"00", "01", "10"}));
  EXPECT_EQ(Texts(language_by_recursion(3, 1)), (Strings{"0", "1"}));
  EXPECT_EQ(Texts(language_by_recursion(2, 3)), (Strings{"000", "001", "010", "100", "101"}));
  EXPECT_EQ(language_by_recursion(2, 3).provenance, Provenance::ByRecursion);
  EXPECT_THROW(language_by_recursion(1, 3), InvalidSpec);
}

TEST(LanguageTest, BinaryStrings) {
  EXPECT_EQ(Texts(binary_strings(0)), Strings{""});
  EXPECT_EQ(Texts(binary_strings(2)), (Strings{"00", "01", "10", "11"}));
  EXPECT_EQ(binary_strings(3).size(), 8u);
  for (std::size_t m = 0; m <= 15; ++m) {
    EXPECT_EQ(binary_strings(m).sorted(), binary_strings_full_history(m).sorted()) << m;
    EXPECT_EQ(binary_strings_full_history(m).size(), std::size_t{1} << m);
  }
}

TEST(LanguageTest, AvoidsOnesRun) {
  EXPECT_FALSE(avoids_ones_run(DigitString::parse("0110"), 2));
  EXPECT_TRUE(avoids_ones_run(DigitString::parse("0110"), 3));
  EXPECT_FALSE(avoids_ones_run(DigitString::parse("11111"), 5));
  EXPECT_TRUE(avoids_ones_run(DigitString{}, 1));
  EXPECT_FALSE(avoids_ones_run(DigitString::parse("010"), 1));
  EXPECT_THROW(avoids_ones_run(DigitString::parse("0120"), 2), NonBinaryDigit);
}

TEST(LanguageTest, ThreeConstructionsCoincide) {
  for (unsigned k = 2; k <= 5; ++k) {
    const NumerationBasis basis(KBonacci{k});
    for (std::size_t m = 0; m <= 15; ++m) {
      const auto counting = language_by_counting(basis, m).sorted();
      const auto recursion = language_by_recursion(k, m).sorted();
      std::vector<DigitString> filtered;
      for (const auto& s : binary_strings(m).elements)
        if (avoids_ones_run(s, k)) filtered.push_back(s);
      EXPECT_EQ(counting, recursion) << "k=" << k << " m=" << m;
      EXPECT_EQ(counting, filtered) << "k=" << k << " m=" << m;
      EXPECT_EQ(counting.size(), static_cast<std::size_t>(ref::kbonacci(k, 15)[m]));
      for (const auto& s : counting) EXPECT_LE(s.max_digit(), 1u);
    }
  }
}

TEST(LanguageTest, CardinalityEqualsTermWithinGuard) {
  const std::vector<SequenceSpec> specs{KBonacci{2}, KBonacci{3}, Pell{}, PowersOfTwo{},
                                        LinearPlus{3, 2}, LinearMinus{3, 2}, LinearMinus{5, 2}};
  for (const auto& spec : specs) {
    const NumerationBasis b(spec);
    for (std::size_t m = 0; m <= 15 && b.term(m) <= SizeGuard::kDefaultMaxElements / 8; ++m) {
      const auto l = language_by_counting(b, m);
      EXPECT_EQ(Natural(l.size()), b.term(m)) << describe(spec) << " m=" << m;
      const std::set<DigitString> unique(l.elements.begin(), l.elements.end());
      EXPECT_EQ(unique.size(), l.size());
      for (const auto& s : l.elements) ASSERT_EQ(s.size(), m);
    }
  }
}

TEST(LanguageTest, PellAlphabetBoundIsAttained) {
  const NumerationBasis pell(Pell{});
  for (std::size_t m = 0; m <= 10; ++m) {
    Digit top = 0;
    for (const auto& s : language_by_counting(pell, m).elements) top = std::max(top, s.max_digit());
    EXPECT_EQ(top, pell.alphabet_for_length(m)) << m;
  }
}

TEST(LanguageTest, SizeGuardRefusesAndForceOverrides) {
  SizeGuard tight;
  tight.max_elements = 100;
  const NumerationBasis pell(Pell{});
  EXPECT_THROW(language_by_counting(pell, 6, tight), SizeGuardExceeded);
  EXPECT_NO_THROW(language_by_counting(pell, 5, tight));
  EXPECT_THROW(language_by_recursion(2, 12, tight), SizeGuardExceeded);
  EXPECT_THROW(binary_strings(7, tight), SizeGuardExceeded);
  tight.force = true;
  EXPECT_EQ(language_by_counting(pell, 6, tight).size(), 169u);
  EXPECT_THROW(language_by_counting(NumerationBasis(KBonacci{2}), 40), SizeGuardExceeded);
}

}  // namespace
}  // namespace fibgray
