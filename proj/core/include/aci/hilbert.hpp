#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace aci {

using Integer = mpz_class;

// Hilbert function of a graded artinian quotient, stored densely from degree 0.
// The canonical form has no trailing zeros; the zero function is empty.
class HilbertFunction {
 public:
  HilbertFunction() = default;
  explicit HilbertFunction(std::vector<Integer> values);
  HilbertFunction(std::initializer_list<long> values);

  const std::vector<Integer>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool is_zero() const noexcept { return values_.empty(); }

  // Value at degree n; zero outside the stored range.
  Integer operator()(long n) const;

  // Total dimension of the algebra (the generating polynomial at t = 1).
  Integer length() const;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

 private:
  std::vector<Integer> values_;
};

// Sorted generator degrees a_1 <= ... <= a_r of a complete intersection.
class DegreeTuple {
 public:
  DegreeTuple() = default;
  explicit DegreeTuple(std::vector<int> degrees);
  DegreeTuple(std::initializer_list<int> degrees);

  std::span<const int> degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  int sum() const noexcept;

  friend auto operator<=>(const DegreeTuple&, const DegreeTuple&) = default;

 private:
  std::vector<int> degrees_;
};

using Levels = std::vector<std::vector<int>>;

// Twists of a minimal graded free resolution of R/I over R = k[x_1..x_c].
// levels()[i] is the sorted multiset of j with R(-j) in homological position i.
class BettiTable {
 public:
  BettiTable(int variables, Levels levels);

  // Koszul resolution of a complete intersection with r = variables generators.
  static BettiTable koszul(const DegreeTuple& degrees);

  int variables() const noexcept { return variables_; }
  const Levels& levels() const noexcept { return levels_; }
  const std::vector<int>& level(std::size_t i) const { return levels_.at(i); }

  // t: rank of the last module.
  int last_syzygies() const noexcept { return static_cast<int>(levels_.back().size()); }

  int count(std::size_t level, int twist) const;

  friend auto operator<=>(const BettiTable&, const BettiTable&) = default;

 private:
  int variables_;
  Levels levels_;
};

HilbertFunction ci_hilbert(const DegreeTuple& degrees);

// k-fold first difference over the degrees where it can be nonzero.
std::vector<Integer> difference(const HilbertFunction& h, int order);

int socle_degree(const HilbertFunction& h);

// Alternating sum of the twists' monomial counts. Requires finite support.
HilbertFunction hilbert_from_betti(const BettiTable& table);

// Same as hilbert_from_betti but for arbitrary twist lists (e.g. non-minimal
// mapping cones). Level 0 is taken as given.
HilbertFunction hilbert_from_levels(int variables, const Levels& levels);

// Non-artinian mode: values for degrees 0..max_degree, no support check.
std::vector<Integer> hilbert_prefix_from_levels(int variables, const Levels& levels,
                                                int max_degree);

// Lexicographically least tuple with r = H(1) entries, all >= 2, whose
// complete intersection has Hilbert function h.
std::optional<DegreeTuple> recognize_ci(const HilbertFunction& h);

// Lower bound dim I_j - c * dim I_{j-1} (clipped at zero) on the number of
// degree-j minimal generators of any ideal with quotient Hilbert function h.
Integer min_generator_bound(const HilbertFunction& h, int variables, int degree);

// Number of monomials of degree n in c variables; zero for n < 0.
Integer monomial_count(long n, int variables);

}  // namespace aci
