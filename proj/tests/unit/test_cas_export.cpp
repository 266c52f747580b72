#include <gtest/gtest.h>

#include "aci/cas_export.hpp"
#include "aci/classification.hpp"
#include "aci/pfaffian.hpp"

using namespace aci;

TEST(FormatResolution, ExampleTable) {
  const auto t = maximal_table({3, 5, Parity::even});
  EXPECT_EQ(format_resolution(t.table),
            "0 -> R(-7)^2 + R(-8) + R(-9) -> R(-5) + R(-6)^3 + R(-7)^2 + R(-8) -> R(-3)^3 + R(-5) -> R");
}

TEST(ExampleScripts, ExpectedTablesMatchClassification) {
  EXPECT_EQ(example_expected_table(ExampleVariant::maximal), maximal_table({3, 5, Parity::even}).table);
  EXPECT_EQ(example_expected_table(ExampleVariant::cancelled), maximal_table({3, 5, Parity::odd}).table);
}

TEST(ExampleScripts, LintCleanAndByteStable) {
  for (auto v : {ExampleVariant::maximal, ExampleVariant::cancelled}) {
    const auto script = macaulay2_example_script(v);
    EXPECT_TRUE(lint_macaulay2(script).empty());
    EXPECT_EQ(script, macaulay2_example_script(v));
    EXPECT_NE(script.find("setRandomSeed"), std::string::npos);
    EXPECT_NE(script.find("betti res"), std::string::npos);
    EXPECT_NE(script.find("BettiTally"), std::string::npos);
  }
  const auto maximal = macaulay2_example_script(ExampleVariant::maximal);
  EXPECT_NE(maximal.find("(3,{8},8) => 1"), std::string::npos) << maximal;
  EXPECT_EQ(macaulay2_example_script(ExampleVariant::cancelled).find("(3,{8},8)"), std::string::npos);
}

TEST(MonomialScript, CiKoszulTable) {
  const MonomialIdeal ci{Monomial{2, 0, 0}, Monomial{0, 2, 0}, Monomial{0, 0, 3}};
  const auto script = macaulay2_monomial_script(ci, BettiTable::koszul({2, 2, 3}));
  EXPECT_TRUE(lint_macaulay2(script).empty());
  EXPECT_NE(script.find("monomialIdeal(x^2, y^2, z^3)"), std::string::npos) << script;
  EXPECT_EQ(script, macaulay2_monomial_script(ci, BettiTable::koszul({2, 2, 3})));
}

TEST(Lint, FlagsBrokenScripts) {
  EXPECT_FALSE(lint_macaulay2("S = QQ[x,y;\n").empty());
  EXPECT_FALSE(lint_macaulay2("S = QQ[x,y]\n").empty());
  EXPECT_FALSE(lint_macaulay2("S = QQ[x,y]; $\n").empty());
  EXPECT_TRUE(lint_macaulay2("-- comment (\nS = QQ[x,y];\n").empty());
}
