#include "aci/polynomial.hpp"

#include <numeric>

#include "aci/error.hpp"

namespace aci {

VariableList make_variables(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Polynomial::Polynomial(VariableList variables) : variables_(std::move(variables)) {
  if (!variables_) throw Error(ErrorCode::invalid_input, "polynomial needs a variable list");
}

Polynomial Polynomial::constant(VariableList variables, const Integer& value) {
  Polynomial p(std::move(variables));
  p.add_term(Exponents(p.variables_->size(), 0), value);
  return p;
}

Polynomial Polynomial::variable(VariableList variables, std::size_t index, int power) {
  Polynomial p(std::move(variables));
  Exponents e(p.variables_->size(), 0);
  e.at(index) = power;
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (variables_ != other.variables_ && *variables_ != *other.variables_)
    throw Error(ErrorCode::invalid_input, "polynomials over different variable lists");
}

std::optional<int> Polynomial::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& [e, c] : terms_) {
    const int d = std::accumulate(e.begin(), e.end(), 0);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

Integer Polynomial::evaluate(std::span<const Integer> point) const {
  if (point.size() != variables_->size()) throw Error(ErrorCode::invalid_input, "evaluation point has wrong size");
  Integer total = 0;
  for (const auto& [e, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= power;
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.check_compatible(rhs);
  Polynomial out(lhs.variables_);
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      Polynomial::Exponents e(el.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  if (*lhs.variables_ != *rhs.variables_) return false;
  return lhs.terms_ == rhs.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += (*variables_)[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += monomial;
    }
  }
  return out;
}

}  // namespace aci
