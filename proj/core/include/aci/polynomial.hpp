#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aci/hilbert.hpp"

namespace aci {

using VariableList = std::shared_ptr<const std::vector<std::string>>;

VariableList make_variables(std::vector<std::string> names);

// Sparse polynomial with exact integer coefficients over a fixed variable list.
// Exponent vectors are dense over the list; zero coefficients are never stored.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Integer>;

  explicit Polynomial(VariableList variables);

  static Polynomial constant(VariableList variables, const Integer& value);
  static Polynomial variable(VariableList variables, std::size_t index, int power = 1);

  const VariableList& variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Degree if every term has the same total degree; nullopt for 0 or mixed.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  Integer evaluate(std::span<const Integer> point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  // Terms in descending lexicographic order, e.g. "-x24*x35 + x25*x34".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Integer& c);
  void check_compatible(const Polynomial& other) const;

  VariableList variables_;
  Terms terms_;
};

}  // namespace aci
