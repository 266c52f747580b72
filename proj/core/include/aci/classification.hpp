#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aci/hilbert.hpp"

namespace aci {

// Betti tables of almost complete intersections R/I_Q, R = k[x,y,z], with
// Hilbert function H_{CI(a,a,a)} and I_Q generated in degrees (a,a,a,h).

enum class Parity { even, odd };

std::string_view to_string(Parity p) noexcept;

struct AciFamily {
  int a = 0;
  int h = 0;
  Parity parity = Parity::even;

  // Validates a >= 2, a+1 <= h <= 3a-2, even => h <= 2a-1, odd => h >= a+2.
  static AciFamily make(int a, int h, Parity parity);

  // Sum of the twists of each self-dual couple: 3a + h.
  int duality_shift() const noexcept { return 3 * a + h; }

  friend bool operator==(const AciFamily&, const AciFamily&) = default;
};

// R(-twist) + R(-partner) removed from levels 2 and 3 at once; twist <= partner.
struct CancellationCouple {
  int twist = 0;
  int partner = 0;

  friend bool operator==(const CancellationCouple&, const CancellationCouple&) = default;
};

struct ClassifiedTable {
  BettiTable table;
  AciFamily family;

  int t() const noexcept { return table.last_syzygies(); }
};

ClassifiedTable maximal_table(const AciFamily& family);

std::vector<CancellationCouple> allowed_couples(const AciFamily& family);

ClassifiedTable cancel_couple(const ClassifiedTable& table, const CancellationCouple& couple);

// Removes the single R(-(a+h)) from levels 2 and 3; needs t >= 4.
ClassifiedTable cancel_ah(const ClassifiedTable& table);

enum class EdgeKind { couple, ah };

std::string_view to_string(EdgeKind k) noexcept;

struct TableEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeKind kind = EdgeKind::couple;
  std::vector<int> twists;
};

struct TablePoset {
  int a = 0;
  int h = 0;
  std::vector<ClassifiedTable> tables;  // lexicographic on levels
  std::vector<TableEdge> edges;
};

TablePoset enumerate_tables(int a, int h);

// a+1 for even a, a for odd a.
int t_max(int a);

// Distinguished generator degree: a if t is even, h if t is odd.
int d_star(const ClassifiedTable& table);

}  // namespace aci
