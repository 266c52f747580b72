#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aci/hilbert.hpp"

namespace aci {

// Exponent vector over x_1 < x_2 < ... < x_c.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  Monomial(std::initializer_list<int> exponents);

  static Monomial one(int variables) { return Monomial(std::vector<int>(static_cast<std::size_t>(variables), 0)); }
  static Monomial pure_power(int variables, int index, int exponent);

  std::span<const int> exponents() const noexcept { return exponents_; }
  int variables() const noexcept { return static_cast<int>(exponents_.size()); }
  int operator[](std::size_t i) const { return exponents_[i]; }
  int degree() const noexcept;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  // this / gcd(this, other): the generator of (this) : other.
  Monomial quotient_by(const Monomial& other) const;
  Monomial times_variable(int index) const;

  // Index of the variable if this is x_i^e with e >= 1.
  std::optional<int> pure_power_variable() const;

  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
};

// Monomial ideal in c variables given by its minimal generators.
class MonomialIdeal {
 public:
  // Drops duplicates and non-minimal generators; surviving generators keep
  // their input order.
  static MonomialIdeal minimalize(std::vector<Monomial> gens, int variables);
  static MonomialIdeal unit(int variables);

  MonomialIdeal(std::initializer_list<Monomial> gens);

  int variables() const noexcept { return variables_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const;
  bool is_artinian() const;
  bool contains(const Monomial& m) const;

  // Generator degrees, sorted.
  std::vector<int> generator_degrees() const;

  // If the ideal is (x_1^{e_1}, ..., x_c^{e_c}), the exponents in variable order.
  std::optional<std::vector<int>> ci_exponents() const;

  // Sum of (e_i - 1) over the smallest pure powers; bounds the socle degree.
  int socle_bound() const;

  // Human syntax, e.g. "x^2, y^2, z^3, xz".
  std::string to_string() const;

  // Same generators as sets.
  friend bool operator==(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

 private:
  MonomialIdeal(int variables, std::vector<Monomial> gens) : variables_(variables), gens_(std::move(gens)) {}

  int variables_ = 0;
  std::vector<Monomial> gens_;
};

std::string variable_name(int index, int variables);

// Standard monomials of degree n (not in the ideal), in lexicographic order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int degree);

HilbertFunction hilbert_function(const MonomialIdeal& ideal);

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);

// Monomial almost complete intersection with the Hilbert function of
// CI(a_1..a_r): (x_1^{a_1}, ..., x_{r-1}^{a_{r-1}}, x_r^h,
//   x_1^{a_1+a_r-h} x_2^{a_2-a_1} ... x_{r-1}^{a_{r-1}-a_{r-2}} x_r^{h-a_{r-1}}).
// Requires all a_i >= 2, r >= 2 and a_r + 1 <= h <= a_r + a_1 - 1.
MonomialIdeal aci_construction(const DegreeTuple& degrees, int h);

// (x^a, y^{a+1}, z^a, x^{a-1} y) in k[x,y,z].
MonomialIdeal rigid_aci_witness(int a);

}  // namespace aci
