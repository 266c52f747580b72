#include "aci/classification.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <tuple>

#include "aci/error.hpp"

namespace aci {

std::string_view to_string(Parity p) noexcept { return p == Parity::even ? "even" : "odd"; }

std::string_view to_string(EdgeKind k) noexcept { return k == EdgeKind::couple ? "couple" : "a+h"; }

namespace {

void check_range(int a, int h) {
  if (a < 2) throw Error(ErrorCode::out_of_range, "a must be >= 2");
  if (h < a + 1 || h > 3 * a - 2)
    throw Error(ErrorCode::out_of_range,
                "h must satisfy a+1 <= h <= 3a-2 (" + std::to_string(a + 1) + " .. " + std::to_string(3 * a - 2) + ")");
}

bool even_family_exists(int a, int h) { return h <= 2 * a - 1; }
bool odd_family_exists(int a, int h) { return h >= a + 2; }

// Smallest and largest twist i that may appear in a couple {i, 3a+h-i}.
std::pair<int, int> couple_range(const AciFamily& f) {
  if (f.h >= 2 * f.a) return {f.h + 1, 3 * f.a - 1};
  return {2 * f.a + 1, f.a + f.h - 1};
}

void remove_one(std::vector<int>& level, int twist) {
  auto it = std::find(level.begin(), level.end(), twist);
  if (it == level.end()) throw Error(ErrorCode::not_present, "twist " + std::to_string(twist) + " not present");
  level.erase(it);
}

}  // namespace

AciFamily AciFamily::make(int a, int h, Parity parity) {
  check_range(a, h);
  if (parity == Parity::even && !even_family_exists(a, h))
    throw Error(ErrorCode::not_allowed, "t cannot be even when h >= 2a (no minimal first syzygy of degree a+h)");
  if (parity == Parity::odd && !odd_family_exists(a, h))
    throw Error(ErrorCode::not_allowed, "t cannot be odd when h = a+1 (the resolution is rigid with t = 2)");
  return AciFamily{a, h, parity};
}

ClassifiedTable maximal_table(const AciFamily& family) {
  const AciFamily f = AciFamily::make(family.a, family.h, family.parity);
  const int a = f.a;
  const int h = f.h;

  std::vector<int> free_part;
  if (f.parity == Parity::even) {
    for (int j = 2 * a + 1; j <= a + h; ++j) free_part.push_back(j);
  } else if (h < 2 * a) {
    for (int j = 2 * a + 1; j <= a + h - 1; ++j) free_part.push_back(j);
  } else {
    for (int j = h + 1; j <= 3 * a - 1; ++j) free_part.push_back(j);
  }
  if ((h - a) % 2 == 0) free_part.push_back((3 * a + h) / 2);

  Levels levels(4);
  levels[0] = {0};
  levels[1] = {a, a, a, h};
  levels[2] = {h, 2 * a, 2 * a, 2 * a};
  levels[2].insert(levels[2].end(), free_part.begin(), free_part.end());
  levels[3] = free_part;
  levels[3].push_back(3 * a);
  return ClassifiedTable{BettiTable(3, std::move(levels)), f};
}

std::vector<CancellationCouple> allowed_couples(const AciFamily& family) {
  const AciFamily f = AciFamily::make(family.a, family.h, family.parity);
  const auto [low, high] = couple_range(f);
  const int shift = f.duality_shift();
  std::vector<CancellationCouple> out;
  for (int i = low; i <= high && 2 * i <= shift; ++i) out.push_back({i, shift - i});
  return out;
}

ClassifiedTable cancel_couple(const ClassifiedTable& table, const CancellationCouple& couple) {
  const auto allowed = allowed_couples(table.family);
  if (std::find(allowed.begin(), allowed.end(), couple) == allowed.end())
    throw Error(ErrorCode::not_allowed, "couple {" + std::to_string(couple.twist) + ", " +
                                            std::to_string(couple.partner) + "} is not an allowed cancellation");
  if (table.family.parity == Parity::odd && table.t() < 5)
    throw Error(ErrorCode::not_allowed, "t would drop below 3");

  Levels levels = table.table.levels();
  try {
    for (std::size_t level : {2u, 3u}) {
      remove_one(levels[level], couple.twist);
      remove_one(levels[level], couple.partner);
    }
  } catch (const Error&) {
    throw Error(ErrorCode::not_present, "couple not present");
  }
  return ClassifiedTable{BettiTable(3, std::move(levels)), table.family};
}

ClassifiedTable cancel_ah(const ClassifiedTable& table) {
  const int a = table.family.a;
  const int h = table.family.h;
  if (table.family.parity != Parity::even || table.table.count(2, a + h) == 0 || table.table.count(3, a + h) == 0)
    throw Error(ErrorCode::not_present, "no a+h syzygy (t odd)");
  if (table.t() < 4) throw Error(ErrorCode::not_allowed, "not cancellable: R(-(a+h)) needs t >= 4");

  Levels levels = table.table.levels();
  remove_one(levels[2], a + h);
  remove_one(levels[3], a + h);
  return ClassifiedTable{BettiTable(3, std::move(levels)), AciFamily::make(a, h, Parity::odd)};
}

TablePoset enumerate_tables(int a, int h) {
  check_range(a, h);

  std::map<BettiTable, ClassifiedTable> found;
  std::deque<ClassifiedTable> queue;
  auto visit = [&](ClassifiedTable t) {
    if (found.emplace(t.table, t).second) queue.push_back(std::move(t));
  };
  if (even_family_exists(a, h)) visit(maximal_table({a, h, Parity::even}));
  if (odd_family_exists(a, h)) visit(maximal_table({a, h, Parity::odd}));

  struct PendingEdge {
    BettiTable from;
    BettiTable to;
    EdgeKind kind;
    std::vector<int> twists;
  };
  std::vector<PendingEdge> pending;

  while (!queue.empty()) {
    const ClassifiedTable current = queue.front();
    queue.pop_front();
    for (const auto& couple : allowed_couples(current.family)) {
      if (current.family.parity == Parity::odd && current.t() < 5) break;
      std::optional<ClassifiedTable> next;
      try {
        next = cancel_couple(current, couple);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::not_present) continue;
        throw;
      }
      pending.push_back({current.table, next->table, EdgeKind::couple, {couple.twist, couple.partner}});
      visit(std::move(*next));
    }
    if (current.family.parity == Parity::even && current.t() >= 4) {
      ClassifiedTable next = cancel_ah(current);
      pending.push_back({current.table, next.table, EdgeKind::ah, {a + h}});
      visit(std::move(next));
    }
  }

  TablePoset poset;
  poset.a = a;
  poset.h = h;
  std::map<BettiTable, std::size_t> index;
  for (auto& [key, table] : found) {
    index.emplace(key, poset.tables.size());
    poset.tables.push_back(table);
  }
  for (auto& e : pending) poset.edges.push_back({index.at(e.from), index.at(e.to), e.kind, std::move(e.twists)});
  std::sort(poset.edges.begin(), poset.edges.end(), [](const TableEdge& l, const TableEdge& r) {
    return std::tie(l.from, l.to, l.kind, l.twists) < std::tie(r.from, r.to, r.kind, r.twists);
  });
  return poset;
}

int t_max(int a) {
  if (a < 2) throw Error(ErrorCode::out_of_range, "a must be >= 2");
  return a % 2 == 0 ? a + 1 : a;
}

int d_star(const ClassifiedTable& table) { return table.t() % 2 == 0 ? table.family.a : table.family.h; }

}  // namespace aci
