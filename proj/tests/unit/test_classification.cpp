#include <gtest/gtest.h>

#include <algorithm>

#include "aci/classification.hpp"
#include "aci/error.hpp"

using namespace aci;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::unsupported;
}

Levels levels_of(const ClassifiedTable& t) { return t.table.levels(); }

}  // namespace

TEST(AciFamily, Validation) {
  EXPECT_EQ(code_of([] { AciFamily::make(3, 6, Parity::even); }), ErrorCode::not_allowed);
  EXPECT_EQ(code_of([] { AciFamily::make(3, 4, Parity::odd); }), ErrorCode::not_allowed);
  EXPECT_EQ(code_of([] { AciFamily::make(3, 8, Parity::odd); }), ErrorCode::out_of_range);
  EXPECT_EQ(code_of([] { AciFamily::make(1, 2, Parity::even); }), ErrorCode::out_of_range);
  EXPECT_EQ(AciFamily::make(4, 7, Parity::even).duality_shift(), 19);
}

TEST(MaximalTable, Examples) {
  const auto even = maximal_table({3, 5, Parity::even});
  EXPECT_EQ(levels_of(even), (Levels{{0}, {3, 3, 3, 5}, {5, 6, 6, 6, 7, 7, 8}, {7, 7, 8, 9}}));
  EXPECT_EQ(even.t(), 4);

  const auto odd = maximal_table({3, 5, Parity::odd});
  EXPECT_EQ(levels_of(odd), (Levels{{0}, {3, 3, 3, 5}, {5, 6, 6, 6, 7, 7}, {7, 7, 9}}));
  EXPECT_EQ(odd.t(), 3);

  const auto high = maximal_table({3, 6, Parity::odd});
  EXPECT_EQ(levels_of(high), (Levels{{0}, {3, 3, 3, 6}, {6, 6, 6, 6, 7, 8}, {7, 8, 9}}));
  EXPECT_EQ(high.t(), 3);
}

TEST(AllowedCouples, Examples) {
  EXPECT_EQ(allowed_couples({4, 7, Parity::even}), (std::vector<CancellationCouple>{{9, 10}}));
  EXPECT_TRUE(allowed_couples({3, 4, Parity::even}).empty());
  EXPECT_EQ(allowed_couples({3, 5, Parity::even}), (std::vector<CancellationCouple>{{7, 7}}));
}

TEST(CancelCouple, Examples) {
  const auto t47 = cancel_couple(maximal_table({4, 7, Parity::even}), {9, 10});
  EXPECT_EQ(t47.table.level(3), (std::vector<int>{11, 12}));
  EXPECT_EQ(t47.table.level(2), (std::vector<int>{7, 8, 8, 8, 11}));
  EXPECT_EQ(t47.t(), 2);
  EXPECT_EQ(hilbert_from_betti(t47.table), ci_hilbert({4, 4, 4}));

  const auto t35 = cancel_couple(maximal_table({3, 5, Parity::even}), {7, 7});
  EXPECT_EQ(t35.table.level(3), (std::vector<int>{8, 9}));
  EXPECT_EQ(t35.table.level(2), (std::vector<int>{5, 6, 6, 6, 8}));
  EXPECT_EQ(t35.t(), 2);
}

TEST(CancelCouple, Errors) {
  EXPECT_EQ(code_of([] { cancel_couple(maximal_table({3, 5, Parity::odd}), {7, 7}); }), ErrorCode::not_allowed);
  const auto once = cancel_couple(maximal_table({3, 5, Parity::even}), {7, 7});
  EXPECT_EQ(code_of([&] { cancel_couple(once, {7, 7}); }), ErrorCode::not_present);
  EXPECT_EQ(code_of([] { cancel_couple(maximal_table({4, 7, Parity::even}), {8, 11}); }), ErrorCode::not_allowed);
}

TEST(CancelAh, Examples) {
  const auto w = cancel_ah(maximal_table({3, 5, Parity::even}));
  EXPECT_EQ(w.table, maximal_table({3, 5, Parity::odd}).table);
  EXPECT_EQ(w.family.parity, Parity::odd);

  const auto w47 = cancel_ah(maximal_table({4, 7, Parity::even}));
  EXPECT_EQ(w47.table, maximal_table({4, 7, Parity::odd}).table);
  EXPECT_EQ(w47.t(), 3);
}

TEST(CancelAh, Errors) {
  EXPECT_EQ(code_of([] { cancel_ah(maximal_table({3, 4, Parity::even})); }), ErrorCode::not_allowed);
  EXPECT_EQ(code_of([] { cancel_ah(maximal_table({3, 5, Parity::odd})); }), ErrorCode::not_present);
}

TEST(EnumerateTables, Examples) {
  EXPECT_EQ(enumerate_tables(3, 4).tables.size(), 1u);
  EXPECT_EQ(enumerate_tables(3, 4).tables.front().t(), 2);

  const auto p35 = enumerate_tables(3, 5);
  ASSERT_EQ(p35.tables.size(), 3u);
  std::vector<std::pair<Parity, int>> kinds;
  for (const auto& t : p35.tables) kinds.emplace_back(t.family.parity, t.t());
  std::sort(kinds.begin(), kinds.end());
  EXPECT_EQ(kinds, (std::vector<std::pair<Parity, int>>{{Parity::even, 2}, {Parity::even, 4}, {Parity::odd, 3}}));
  ASSERT_EQ(p35.edges.size(), 2u);
  EXPECT_EQ(std::count_if(p35.edges.begin(), p35.edges.end(), [](const TableEdge& e) { return e.kind == EdgeKind::ah; }),
            1);

  EXPECT_EQ(enumerate_tables(2, 3).tables.size(), 1u);
  const auto p24 = enumerate_tables(2, 4);
  ASSERT_EQ(p24.tables.size(), 1u);
  EXPECT_EQ(p24.tables.front().table.level(3), (std::vector<int>{5, 5, 6}));
  EXPECT_EQ(code_of([] { enumerate_tables(3, 8); }), ErrorCode::out_of_range);
}

TEST(EnumerateTables, EdgesPointToSmallerTables) {
  for (int a = 2; a <= 6; ++a)
    for (int h = a + 1; h <= 3 * a - 2; ++h) {
      const auto poset = enumerate_tables(a, h);
      for (const auto& e : poset.edges) {
        const auto& from = poset.tables[e.from];
        const auto& to = poset.tables[e.to];
        EXPECT_EQ(to.t(), from.t() - (e.kind == EdgeKind::ah ? 1 : 2));
        EXPECT_EQ(hilbert_from_betti(to.table), hilbert_from_betti(from.table));
      }
      // Enumeration is deterministic.
      const auto again = enumerate_tables(a, h);
      ASSERT_EQ(again.tables.size(), poset.tables.size());
      for (std::size_t i = 0; i < poset.tables.size(); ++i) EXPECT_EQ(again.tables[i].table, poset.tables[i].table);
    }
}

TEST(TMax, FormulaValues) {
  EXPECT_EQ(t_max(2), 3);
  EXPECT_EQ(t_max(3), 3);
  EXPECT_EQ(t_max(4), 5);
  EXPECT_EQ(code_of([] { t_max(1); }), ErrorCode::out_of_range);
}

TEST(DStar, Examples) {
  EXPECT_EQ(d_star(maximal_table({3, 5, Parity::even})), 3);
  EXPECT_EQ(d_star(maximal_table({3, 5, Parity::odd})), 5);
  for (int a = 2; a <= 6; ++a) EXPECT_EQ(d_star(maximal_table({a, a + 1, Parity::even})), a);
}
