#include "aci/liaison.hpp"

#include <algorithm>
#include <map>

#include "aci/error.hpp"

namespace aci {

LinkDatum LinkDatum::of(const DegreeTuple& z) {
  LinkDatum d;
  d.z = z;
  d.theta = z.sum();
  d.socle = d.theta - static_cast<int>(z.size());
  return d;
}

HilbertFunction link_hilbert(const DegreeTuple& z, const HilbertFunction& hq, LinkMode mode) {
  const LinkDatum link = LinkDatum::of(z);
  const HilbertFunction hz = ci_hilbert(z);
  if (static_cast<int>(hq.size()) - 1 > link.socle)
    throw Error(ErrorCode::not_linked, "not linked in this CI: H_Q extends past the socle degree of I_Z");
  std::vector<Integer> values(static_cast<std::size_t>(link.socle) + 1);
  for (int n = 0; n <= link.socle; ++n) {
    values[static_cast<std::size_t>(n)] = hz(n) - hq(link.socle - n);
    if (values[static_cast<std::size_t>(n)] < 0)
      throw Error(ErrorCode::not_linked, "not linked in this CI: negative value at degree " + std::to_string(n));
  }
  HilbertFunction out(std::move(values));
  if (out.is_zero() && mode == LinkMode::strict)
    throw Error(ErrorCode::not_linked, "not linked: I_Q equals I_Z (linked ideal is the unit ideal)");
  return out;
}

bool ci_link_identity(int a, int h) {
  if (a < 2 || h < a + 1 || h > 3 * a - 2)
    throw Error(ErrorCode::out_of_range, "need a >= 2 and a+1 <= h <= 3a-2");
  const HilbertFunction hz = ci_hilbert(DegreeTuple{a, a, h});
  const HilbertFunction hq = ci_hilbert(DegreeTuple{a, a, a});
  const HilbertFunction hg = ci_hilbert(DegreeTuple{h - a, a, a});
  const int e = 2 * a + h - 3;
  for (int n = -1; n <= e + 1; ++n)
    if (hz(n) - hq(e - n) != hg(n)) return false;
  return true;
}

std::vector<CancellationCandidate> consecutive_candidates(const Levels& levels) {
  std::vector<CancellationCandidate> out;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    std::map<int, int> here;
    for (int t : levels[i]) ++here[t];
    std::map<int, int> next;
    for (int t : levels[i + 1]) ++next[t];
    for (const auto& [twist, count] : here) {
      auto it = next.find(twist);
      if (it != next.end())
        out.push_back({static_cast<int>(i), twist, std::min(count, it->second)});
    }
  }
  return out;
}

Levels MappingCone::cancel_all() const {
  Levels out = levels;
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    for (const auto& c : consecutive_candidates({out[i], out[i + 1]})) {
      for (int k = 0; k < c.multiplicity; ++k) {
        out[i].erase(std::find(out[i].begin(), out[i].end(), c.twist));
        out[i + 1].erase(std::find(out[i + 1].begin(), out[i + 1].end(), c.twist));
      }
    }
  }
  return out;
}

MappingCone mapping_cone_twists(const BettiTable& q, const DegreeTuple& z) {
  if (q.variables() != 3 || z.size() != 3)
    throw Error(ErrorCode::invalid_input, "mapping cone bookkeeping is for codimension 3");
  MappingCone cone;
  cone.link = LinkDatum::of(z);
  const int theta = cone.link.theta;

  cone.levels.assign(4, {});
  cone.levels[0] = {0};
  for (int s : q.level(3)) cone.levels[1].push_back(theta - s);
  for (int d : z.degrees()) cone.levels[1].push_back(d);
  for (int s : q.level(2)) cone.levels[2].push_back(theta - s);
  for (int d : z.degrees()) cone.levels[2].push_back(theta - d);
  for (int s : q.level(1)) cone.levels[3].push_back(theta - s);
  for (auto& level : cone.levels) std::sort(level.begin(), level.end());

  cone.candidates = consecutive_candidates(cone.levels);

  HilbertFunction expected;
  try {
    expected = link_hilbert(z, hilbert_from_betti(q), LinkMode::lax);
    cone.hilbert = hilbert_from_levels(3, cone.levels);
  } catch (const Error& e) {
    throw Error(ErrorCode::inconsistent_link, std::string("inconsistent link data: ") + e.what());
  }
  if (cone.hilbert != expected)
    throw Error(ErrorCode::inconsistent_link, "inconsistent link data: cone Hilbert function differs from the link");
  return cone;
}

}  // namespace aci
