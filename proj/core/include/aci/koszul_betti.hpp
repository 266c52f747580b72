#pragma once

#include <string>
#include <vector>

#include "aci/hilbert.hpp"
#include "aci/linalg.hpp"
#include "aci/monomial_ideal.hpp"

namespace aci {

// One basis element e_S (x) m of the Koszul complex K(x_1..x_c) (x) R/I.
struct KoszulBasisElement {
  unsigned subset;  // bitmask S
  Monomial monomial;
};

// Internal-degree-j strand of K(x) (x) R/I. bases[i] spans position i
// (subsets of size i times standard monomials of degree j - i);
// differentials[i] maps position i to i - 1 (differentials[0] is empty).
struct GradedStrand {
  int degree = 0;
  std::vector<std::vector<KoszulBasisElement>> bases;
  std::vector<IntegerMatrix> differentials;
};

inline constexpr std::size_t kMaxStrandDimension = 10000;

GradedStrand build_strand(const MonomialIdeal& ideal, int degree);

// beta_{i,j} = dim H_i of the degree-j strand, computed over Q.
BettiTable betti_numbers(const MonomialIdeal& ideal);

struct ResolutionCheck {
  bool matches = false;
  std::vector<std::string> differences;  // one line per mismatching (level, twist)
};

ResolutionCheck verify_resolution(const MonomialIdeal& ideal, const BettiTable& expected);

// Per-level multiset comparison; used by verify_resolution and the CLI.
std::vector<std::string> table_differences(const BettiTable& actual, const BettiTable& expected);

}  // namespace aci
