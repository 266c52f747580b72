#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "aci/linalg.hpp"
#include "generators.hpp"

using namespace aci;

namespace {

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, int bound) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = gen::uniform(-bound, bound);
  return m;
}

// Leibniz formula over all permutations.
Integer leibniz(const IntegerMatrix& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    Integer term = 1;
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      term *= m(i, p[i]);
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST(Linalg, SmallRanks) {
  IntegerMatrix m(2, 3);
  EXPECT_EQ(rank(m), 0u);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  EXPECT_EQ(rank(m), 1u);
  m(1, 2) = 1;
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(rank(IntegerMatrix()), 0u);
}

TEST(Linalg, DeterminantMatchesLeibniz) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(1, 6));
    const auto m = random_matrix(n, n, 9);
    EXPECT_EQ(determinant(m), leibniz(m));
  }
}

TEST(Linalg, RankInvariantUnderPermutation) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto rows = static_cast<std::size_t>(gen::uniform(1, 7));
    const auto cols = static_cast<std::size_t>(gen::uniform(1, 7));
    // Low-rank products exercise the rank-deficient path.
    const auto k = static_cast<std::size_t>(gen::uniform(0, 4));
    const auto m = random_matrix(rows, k, 3) * random_matrix(k, cols, 3);
    std::vector<std::size_t> pr(rows), pc(cols);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), gen::rng());
    std::shuffle(pc.begin(), pc.end(), gen::rng());
    IntegerMatrix p(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) p(r, c) = m(pr[r], pc[c]);
    const auto expected = rank(m);
    EXPECT_EQ(rank(p), expected);
    EXPECT_LE(expected, std::min({rows, cols, k}));
  }
}

TEST(Linalg, FullRankSquareIffNonzeroDeterminant) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(gen::uniform(1, 5));
    const auto m = random_matrix(n, n, 2);
    EXPECT_EQ(rank(m) == n, determinant(m) != 0);
  }
}
