#include "aci/koszul_betti.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "aci/error.hpp"

namespace aci {

namespace {

using BasisIndex = std::map<std::pair<unsigned, Monomial>, std::size_t>;

std::vector<unsigned> subsets_of_size(int variables, int size) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << variables); ++mask)
    if (std::popcount(mask) == size) out.push_back(mask);
  return out;
}

}  // namespace

GradedStrand build_strand(const MonomialIdeal& ideal, int degree) {
  const int c = ideal.variables();
  GradedStrand strand;
  strand.degree = degree;
  strand.bases.resize(static_cast<std::size_t>(c) + 1);
  std::vector<BasisIndex> index(static_cast<std::size_t>(c) + 1);

  std::size_t total = 0;
  for (int i = 0; i <= c; ++i) {
    const auto monomials = standard_monomials(ideal, degree - i);
    for (unsigned subset : subsets_of_size(c, i)) {
      for (const auto& m : monomials) {
        index[static_cast<std::size_t>(i)].emplace(std::make_pair(subset, m), strand.bases[static_cast<std::size_t>(i)].size());
        strand.bases[static_cast<std::size_t>(i)].push_back({subset, m});
      }
    }
    total += strand.bases[static_cast<std::size_t>(i)].size();
  }
  if (total > kMaxStrandDimension)
    throw Error(ErrorCode::instance_too_large, "instance too large: strand dimension " + std::to_string(total));

  strand.differentials.resize(static_cast<std::size_t>(c) + 1);
  for (int i = 1; i <= c; ++i) {
    const auto& source = strand.bases[static_cast<std::size_t>(i)];
    const auto& target = strand.bases[static_cast<std::size_t>(i) - 1];
    IntegerMatrix d(target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
      const auto& [subset, m] = source[col];
      int position = 0;
      for (int s = 0; s < c; ++s) {
        if (!(subset & (1u << s))) continue;
        // d(e_S (x) m) = sum_s (-1)^{pos(s,S)} e_{S\s} (x) x_s m; zero when x_s m lies in I.
        const Monomial image = m.times_variable(s);
        const int sign = position % 2 == 0 ? 1 : -1;
        ++position;
        if (ideal.contains(image)) continue;
        const auto it = index[static_cast<std::size_t>(i) - 1].find({subset & ~(1u << s), image});
        d(it->second, col) = sign;
      }
    }
    strand.differentials[static_cast<std::size_t>(i)] = std::move(d);
  }
  return strand;
}

BettiTable betti_numbers(const MonomialIdeal& ideal) {
  const int c = ideal.variables();
  if (c > 4) throw Error(ErrorCode::instance_too_large, "instance too large: more than 4 variables");
  if (!ideal.is_artinian()) throw Error(ErrorCode::infinite_support, "ideal is not artinian");
  if (ideal.is_unit()) throw Error(ErrorCode::empty_algebra, "empty algebra");

  // Size check up front so large instances fail before any elimination.
  const HilbertFunction hf = hilbert_function(ideal);
  const int top = ideal.socle_bound() + c;
  for (int j = 0; j <= top; ++j) {
    Integer total = 0;
    for (int i = 0; i <= c; ++i) total += Integer(subsets_of_size(c, i).size()) * hf(j - i);
    if (total > static_cast<unsigned long>(kMaxStrandDimension))
      throw Error(ErrorCode::instance_too_large, "instance too large: strand dimension " + total.get_str());
  }

  Levels levels(static_cast<std::size_t>(c) + 1);
  for (int j = 0; j <= top; ++j) {
    const GradedStrand strand = build_strand(ideal, j);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(c) + 2, 0);
    for (int i = 1; i <= c; ++i) ranks[static_cast<std::size_t>(i)] = rank(strand.differentials[static_cast<std::size_t>(i)]);
    for (int i = 0; i <= c; ++i) {
      const std::size_t dim = strand.bases[static_cast<std::size_t>(i)].size();
      const std::size_t betti = dim - ranks[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i) + 1];
      levels[static_cast<std::size_t>(i)].insert(levels[static_cast<std::size_t>(i)].end(), betti, j);
    }
  }
  return BettiTable(c, std::move(levels));
}

std::vector<std::string> table_differences(const BettiTable& actual, const BettiTable& expected) {
  std::vector<std::string> out;
  if (actual.variables() != expected.variables()) {
    out.push_back("variable count " + std::to_string(actual.variables()) + " != " +
                  std::to_string(expected.variables()));
    return out;
  }
  for (std::size_t i = 0; i < actual.levels().size(); ++i) {
    std::vector<int> twists = actual.level(i);
    twists.insert(twists.end(), expected.level(i).begin(), expected.level(i).end());
    std::sort(twists.begin(), twists.end());
    twists.erase(std::unique(twists.begin(), twists.end()), twists.end());
    for (int j : twists) {
      const int got = actual.count(i, j);
      const int want = expected.count(i, j);
      if (got != want)
        out.push_back("level " + std::to_string(i) + " twist " + std::to_string(j) + ": got " +
                      std::to_string(got) + ", expected " + std::to_string(want));
    }
  }
  return out;
}

ResolutionCheck verify_resolution(const MonomialIdeal& ideal, const BettiTable& expected) {
  ResolutionCheck check;
  check.differences = table_differences(betti_numbers(ideal), expected);
  check.matches = check.differences.empty();
  return check;
}

}  // namespace aci
