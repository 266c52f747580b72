#include <gtest/gtest.h>

#include "aci/error.hpp"
#include "aci/monomial_ideal.hpp"
#include "generators.hpp"

using namespace aci;

namespace {

const Monomial x2{2, 0, 0};
const Monomial y2{0, 2, 0};
const Monomial z2{0, 0, 2};
const Monomial z3{0, 0, 3};
const Monomial xz{1, 0, 1};

// Brute force: count monomials of degree n not divisible by any generator.
long brute_force_count(const MonomialIdeal& ideal, int n) {
  long count = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const Monomial m{i, j, n - i - j};
      bool in = false;
      for (const auto& g : ideal.generators()) in = in || g.divides(m);
      if (!in) ++count;
    }
  return count;
}

}  // namespace

TEST(Monomial, Arithmetic) {
  const Monomial a{2, 1, 0};
  const Monomial b{1, 3, 1};
  EXPECT_EQ(a.lcm(b), (Monomial{2, 3, 1}));
  EXPECT_EQ(a.gcd(b), (Monomial{1, 1, 0}));
  EXPECT_EQ(a.quotient_by(b), (Monomial{1, 0, 0}));
  EXPECT_TRUE((Monomial{1, 1, 0}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ(xz.to_string(), "xz");
  EXPECT_EQ(x2.to_string(), "x^2");
  EXPECT_EQ(Monomial::one(3).to_string(), "1");
  EXPECT_EQ(z3.pure_power_variable(), 2);
  EXPECT_EQ(xz.pure_power_variable(), std::nullopt);
}

TEST(Minimalize, Examples) {
  const auto m = MonomialIdeal::minimalize({x2, Monomial{3, 0, 0}, Monomial{0, 1, 0}}, 3);
  EXPECT_EQ(m, (MonomialIdeal{x2, Monomial{0, 1, 0}}));
  const MonomialIdeal antichain{xz, x2, y2, z3};
  EXPECT_EQ(antichain.generators().size(), 4u);
  EXPECT_TRUE(MonomialIdeal::minimalize({}, 3).is_zero());
}

TEST(Minimalize, ResultIsAnAntichainGeneratingTheSameIdeal) {
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 8; ++k)
      gens.push_back(Monomial{gen::uniform(0, 4), gen::uniform(0, 4), gen::uniform(0, 4)});
    const auto ideal = MonomialIdeal::minimalize(gens, 3);
    for (const auto& g : gens) EXPECT_TRUE(ideal.contains(g));
    for (const auto& p : ideal.generators())
      for (const auto& q : ideal.generators())
        if (!(p == q)) EXPECT_FALSE(p.divides(q));
  }
}

TEST(HilbertFunction, Examples) {
  EXPECT_EQ(hilbert_function(MonomialIdeal{x2, y2, z2}), (HilbertFunction{1, 3, 3, 1}));
  EXPECT_EQ(hilbert_function(MonomialIdeal{x2, y2, z3, xz}), (HilbertFunction{1, 3, 3, 1}));
  const MonomialIdeal i{x2, Monomial{0, 3, 0}, Monomial{0, 0, 5}, Monomial{1, 1, 2}};
  EXPECT_EQ(hilbert_function(i), (HilbertFunction{1, 3, 5, 6, 5, 3, 1}));
  EXPECT_EQ(hilbert_function(i), ci_hilbert({2, 3, 4}));
}

TEST(HilbertFunction, NonArtinianIsAnError) {
  try {
    hilbert_function(MonomialIdeal{x2, y2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::infinite_support);
  }
}

TEST(HilbertFunction, MatchesBruteForceCount) {
  for (int trial = 0; trial < 60; ++trial) {
    const auto ideal = gen::random_artinian_ideal(5, 4);
    const auto h = hilbert_function(ideal);
    for (int n = 0; n <= 14; ++n) EXPECT_EQ(h(n), brute_force_count(ideal, n)) << ideal.to_string();
  }
}

TEST(Colon, Examples) {
  const MonomialIdeal z{x2, y2, z3};
  const MonomialIdeal q{x2, y2, z3, xz};
  const MonomialIdeal g = colon(z, q);
  EXPECT_EQ(g, (MonomialIdeal{Monomial{1, 0, 0}, y2, z2}));
  EXPECT_EQ(g.to_string(), "x, y^2, z^2");
  EXPECT_TRUE(colon(q, q).is_unit());

  const MonomialIdeal two{Monomial{2, 0}, Monomial{0, 2}};
  EXPECT_EQ(colon(two, Monomial{1, 0}), (MonomialIdeal{Monomial{1, 0}, Monomial{0, 2}}));
}

TEST(Colon, ByZeroIdealIsAnError) {
  try {
    colon(MonomialIdeal{x2, y2, z2}, MonomialIdeal::minimalize({}, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::colon_by_zero);
  }
}

TEST(Colon, ContainsTheIdealAndSatisfiesTheDefinition) {
  for (int trial = 0; trial < 60; ++trial) {
    const auto i = gen::random_artinian_ideal(5, 3);
    const auto j = gen::random_artinian_ideal(4, 2);
    const auto q = colon(i, j);
    for (const auto& g : i.generators()) EXPECT_TRUE(q.contains(g));
    for (const auto& g : q.generators())
      for (const auto& m : j.generators()) {
        std::vector<int> e(3);
        for (std::size_t k = 0; k < 3; ++k) e[k] = g[k] + m[k];
        EXPECT_TRUE(i.contains(Monomial(e)));
      }
  }
}

TEST(Intersect, IsGeneratedByPairwiseLcms) {
  const MonomialIdeal a{x2, Monomial{0, 1, 0}};
  const MonomialIdeal b{Monomial{1, 0, 0}, z2};
  EXPECT_EQ(intersect(a, b), (MonomialIdeal{x2, Monomial{1, 1, 0}, Monomial{0, 1, 2}}));
}

TEST(AciConstruction, Examples) {
  EXPECT_EQ(aci_construction({2, 2, 2}, 3), (MonomialIdeal{x2, y2, z3, xz}));
  EXPECT_EQ(aci_construction({2, 2, 2}, 3).to_string(), "x^2, y^2, z^3, xz");
  EXPECT_EQ(aci_construction({2, 3, 4}, 5),
            (MonomialIdeal{x2, Monomial{0, 3, 0}, Monomial{0, 0, 5}, Monomial{1, 1, 2}}));
  EXPECT_EQ(aci_construction({3, 3, 3}, 4),
            (MonomialIdeal{Monomial{3, 0, 0}, Monomial{0, 3, 0}, Monomial{0, 0, 4}, Monomial{2, 0, 1}}));
}

TEST(AciConstruction, RangeErrors) {
  for (int h : {2, 4}) {
    try {
      aci_construction({2, 2, 2}, h);
      FAIL() << h;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::out_of_range);
      EXPECT_NE(std::string(e.what()).find("h outside (3 .. 3)"), std::string::npos) << e.what();
    }
  }
}

TEST(AciConstruction, FourVariables) {
  const DegreeTuple d{3, 3, 4, 4};
  for (int h = 5; h <= 6; ++h) {
    const auto ideal = aci_construction(d, h);
    EXPECT_EQ(ideal.generators().size(), 5u);
    EXPECT_EQ(hilbert_function(ideal), ci_hilbert(d));
  }
}

TEST(RigidWitness, Examples) {
  EXPECT_EQ(rigid_aci_witness(2), (MonomialIdeal{x2, Monomial{0, 3, 0}, z2, Monomial{1, 1, 0}}));
  EXPECT_EQ(rigid_aci_witness(3),
            (MonomialIdeal{Monomial{3, 0, 0}, Monomial{0, 4, 0}, Monomial{0, 0, 3}, Monomial{2, 1, 0}}));
  for (int a = 2; a <= 7; ++a) EXPECT_EQ(hilbert_function(rigid_aci_witness(a)), ci_hilbert({a, a, a}));
}
