#pragma once

#include <vector>

#include "aci/hilbert.hpp"

namespace aci {

// Complete intersection I_Z used as the linking ideal.
struct LinkDatum {
  DegreeTuple z;
  int theta = 0;   // sum of z; the duality shift of the resolution
  int socle = 0;   // theta - r; socle degree of R/I_Z

  static LinkDatum of(const DegreeTuple& z);
};

enum class LinkMode { strict, lax };

// H_G(n) = H_Z(n) - H_Q(e - n), e = socle degree of R/I_Z.
// Strict mode rejects the zero function (I_Q = I_Z).
HilbertFunction link_hilbert(const DegreeTuple& z, const HilbertFunction& hq, LinkMode mode = LinkMode::strict);

// H_{CI(a,a,h)}(n) - H_{CI(a,a,a)}(2a+h-3-n) == H_{CI(h-a,a,a)}(n) for all n.
bool ci_link_identity(int a, int h);

// Equal twists at consecutive levels: R(-twist) appears in level and level+1.
struct CancellationCandidate {
  int level = 0;
  int twist = 0;
  int multiplicity = 0;

  friend bool operator==(const CancellationCandidate&, const CancellationCandidate&) = default;
};

// Twists of the (possibly non-minimal) resolution of R/I_G obtained from the
// dual mapping cone of K(z) -> F(Q). The R(-theta) pair at level 3/4 is
// already cancelled.
struct MappingCone {
  LinkDatum link;
  Levels levels;
  std::vector<CancellationCandidate> candidates;
  HilbertFunction hilbert;

  bool minimal() const { return candidates.empty(); }

  // Cancels consecutive pairs greedily, lowest level first. Keeps the Hilbert
  // function; the result is a lower bound, not necessarily realizable.
  Levels cancel_all() const;
};

MappingCone mapping_cone_twists(const BettiTable& q, const DegreeTuple& z);

std::vector<CancellationCandidate> consecutive_candidates(const Levels& levels);

}  // namespace aci
