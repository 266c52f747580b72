#pragma once

#include <random>
#include <vector>

#include "aci/hilbert.hpp"
#include "aci/monomial_ideal.hpp"

namespace aci::gen {

// Fixed seed so failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eedULL);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline DegreeTuple random_degrees(std::size_t r, int lo, int hi) {
  std::vector<int> d(r);
  for (auto& v : d) v = uniform(lo, hi);
  return DegreeTuple(std::move(d));
}

// Artinian monomial ideal in 3 variables: pure powers plus a few random mixed generators.
inline MonomialIdeal random_artinian_ideal(int max_power, int extra) {
  std::vector<Monomial> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(Monomial::pure_power(3, i, uniform(1, max_power)));
  for (int k = 0; k < extra; ++k) {
    Monomial m{uniform(0, max_power - 1), uniform(0, max_power - 1), uniform(0, max_power - 1)};
    if (m.degree() > 0) gens.push_back(m);
  }
  return MonomialIdeal::minimalize(std::move(gens), 3);
}

}  // namespace aci::gen
