#include "fibgray/oracle.hpp"

#include <gtest/gtest.h>

#include "fibgray/errors.hpp"
#include "fibgray/language.hpp"

namespace fibgray {
namespace {

using Strings = std::vector<std::string>;

Strings Texts(const std::vector<DigitString>& v) {
  Strings out;
  for (const auto& s : v) out.push_back(s.to_text());
  return out;
}

TEST(OracleTest, UniqueRepresentationGolden) {
  const auto pell = oracle_unique_representation(NumerationBasis(Pell{}), 3);
  EXPECT_TRUE(pell.agree()) << pell;
  EXPECT_EQ(pell.count, 12u);
  const auto fib = oracle_unique_representation(NumerationBasis(KBonacci{2}), 4);
  EXPECT_TRUE(fib.agree());
  EXPECT_EQ(fib.count, 8u);
  const auto pow2 = oracle_unique_representation(NumerationBasis(PowersOfTwo{}), 3);
  EXPECT_TRUE(pow2.agree());
  EXPECT_EQ(pow2.count, 8u);
}

TEST(OracleTest, UniqueRepresentationAcrossFamilies) {
  const std::vector<SequenceSpec> specs{Pell{}, PowersOfTwo{}, KBonacci{2}, KBonacci{3},
                                        KBonacci{4}, LinearPlus{3, 2}, LinearMinus{3, 2},
                                        LinearMinus{5, 2}};
  for (const auto& spec : specs) {
    const NumerationBasis b(spec);
    for (std::size_t m = 0; m <= 10 && b.term(m) <= SizeGuard::kDefaultMaxElements; ++m) {
      const auto r = oracle_unique_representation(b, m);
      EXPECT_TRUE(r.agree()) << r;
      EXPECT_EQ(Natural(r.count), b.term(m));
    }
  }
}

TEST(OracleTest, UniquenessGuards) {
  EXPECT_THROW(oracle_unique_representation(NumerationBasis(Pell{}), 15), SizeGuardExceeded);
  SizeGuard tight;
  tight.max_elements = 10;
  EXPECT_THROW(oracle_unique_representation(NumerationBasis(Pell{}), 3, tight),
               SizeGuardExceeded);
}

TEST(OracleTest, FilterStringsGolden) {
  EXPECT_EQ(Texts(oracle_filter_strings(2, 3)), (Strings{"000", "001", "010", "100", "101"}));
  EXPECT_EQ(Texts(oracle_filter_strings(3, 2)), (Strings{"00", "01", "10", "11"}));
  EXPECT_EQ(Texts(oracle_filter_strings(2, 2)), (Strings{"00", "01", "10"}));
  EXPECT_EQ(Texts(oracle_filter_strings(2, 0)), Strings{""});
  EXPECT_THROW(oracle_filter_strings(2, 23), SizeGuardExceeded);
}

TEST(OracleTest, FilterStringsMatchesCounting) {
  for (unsigned k = 2; k <= 4; ++k) {
    const NumerationBasis b(KBonacci{k});
    for (std::size_t m = 0; m <= 15; ++m) {
      const auto r = compare_string_sets("counting", "", oracle_filter_strings(k, m),
                                         language_by_counting(b, m).elements);
      EXPECT_TRUE(r.agree()) << r;
    }
  }
}

TEST(OracleTest, FilterPermsGolden) {
  auto texts = [](const std::vector<Permutation>& v) {
    Strings out;
    for (const auto& p : v) out.push_back(p.to_text());
    return out;
  };
  EXPECT_EQ(texts(oracle_filter_perms(2, 3)), (Strings{"123", "132", "213"}));
  EXPECT_EQ(texts(oracle_filter_perms(2, 1)), Strings{"1"});
  EXPECT_EQ(texts(oracle_filter_perms(3, 3)), (Strings{"123", "132", "213", "231"}));
  EXPECT_THROW(oracle_filter_perms(2, 10), SizeGuardExceeded);
}

TEST(OracleTest, FilterPermsMatchesPermSet) {
  for (unsigned k = 2; k <= 4; ++k) {
    for (std::size_t m = 1; m <= 9; ++m) {
      const auto r = compare_perm_sets("perm_set", "", oracle_filter_perms(k, m), perm_set(k, m));
      EXPECT_TRUE(r.agree()) << r;
    }
  }
}

TEST(OracleTest, DisagreementCarriesCounterexample) {
  auto r = compare_string_sets("x", "p", {DigitString::parse("01")}, {DigitString::parse("10")});
  EXPECT_FALSE(r.agree());
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_NE(r.counterexample->find("01"), std::string::npos);

  r = compare_perm_sets("x", "p", {Permutation{1, 2}}, {Permutation{1, 2}, Permutation{1, 2}});
  EXPECT_FALSE(r.agree());
  EXPECT_NE(r.counterexample->find("duplicate"), std::string::npos);
}

}  // namespace
}  // namespace fibgray
