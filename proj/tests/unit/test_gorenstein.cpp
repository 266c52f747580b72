#include <gtest/gtest.h>

#include "aci/error.hpp"
#include "aci/gorenstein.hpp"

using namespace aci;

TEST(GorensteinDelta, Validation) {
  for (const auto& bad : std::vector<std::vector<int>>{{1, 2}, {3, 2, 1}, {1}, {0, 1, 1}}) {
    try {
      GorensteinDelta{bad};
      ADD_FAILURE() << bad.size();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::invalid_input);
    }
  }
  EXPECT_EQ(GorensteinDelta({2, 3, 3, 4, 4}).theta(), 8);
  EXPECT_EQ(GorensteinDelta({1, 1, 2, 2, 3}).theta(), std::nullopt);
}

TEST(Gaeta, Examples) {
  EXPECT_TRUE(gaeta_check(GorensteinDelta({2, 3, 3, 4, 4})).ok);
  EXPECT_TRUE(gaeta_check(GorensteinDelta({1, 1, 1})).ok);
  const auto bad = gaeta_check(GorensteinDelta({2, 2, 5, 5, 5, 5, 6}));
  EXPECT_FALSE(bad.ok);
  EXPECT_NE(bad.reason.find("d_3 + d_6"), std::string::npos) << bad.reason;
  EXPECT_FALSE(gaeta_check(GorensteinDelta({1, 1, 2, 2, 3})).ok);
}

TEST(Gaeta, LinkedDegreeSequences) {
  for (int a = 2; a <= 8; ++a) {
    for (int h = a + 1; h <= 2 * a - 1; ++h) EXPECT_TRUE(gaeta_check(delta_low(a, h)).ok) << a << "," << h;
    for (int h = 2 * a; h <= 3 * a - 2; ++h) EXPECT_TRUE(gaeta_check(delta_high(a, h)).ok) << a << "," << h;
  }
}

TEST(DeltaLowHigh, Examples) {
  EXPECT_EQ(delta_low(3, 5), GorensteinDelta({2, 3, 3, 4, 4}));
  EXPECT_EQ(delta_low(3, 4), GorensteinDelta({1, 3, 3}));
  EXPECT_EQ(delta_high(3, 6), GorensteinDelta({3, 3, 3, 4, 5}));
  EXPECT_THROW(delta_low(3, 6), Error);
  EXPECT_THROW(delta_high(3, 5), Error);
}

TEST(DeltaLowHigh, ThetaIsAPlusH) {
  for (int a = 2; a <= 8; ++a)
    for (int h = a + 1; h <= 3 * a - 2; ++h) {
      const auto d = h <= 2 * a - 1 ? delta_low(a, h) : delta_high(a, h);
      EXPECT_EQ(d.theta(), a + h) << a << "," << h;
    }
}
