#include "aci/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>

#include "aci/error.hpp"

namespace aci {

namespace {

void check_same_variables(int lhs, int rhs) {
  if (lhs != rhs) throw Error(ErrorCode::invalid_input, "monomials live in different rings");
}

// Degree ascending, then lexicographically descending exponents.
bool canonical_less(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
  return lhs > rhs;
}

MonomialIdeal canonical(std::vector<Monomial> gens, int variables) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  return MonomialIdeal::minimalize(std::move(gens), variables);
}

void enumerate_degree(int variables, int degree, std::vector<int>& current, std::size_t index,
                      std::vector<Monomial>& out) {
  if (index + 1 == static_cast<std::size_t>(variables)) {
    current[index] = degree;
    out.emplace_back(current);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current[index] = e;
    enumerate_degree(variables, degree - e, current, index + 1, out);
  }
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_)
    if (e < 0) throw Error(ErrorCode::invalid_input, "negative exponent");
}

Monomial::Monomial(std::initializer_list<int> exponents) : Monomial(std::vector<int>(exponents)) {}

Monomial Monomial::pure_power(int variables, int index, int exponent) {
  std::vector<int> e(static_cast<std::size_t>(variables), 0);
  e.at(static_cast<std::size_t>(index)) = exponent;
  return Monomial(std::move(e));
}

int Monomial::degree() const noexcept { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  check_same_variables(variables(), other.variables());
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_variables(variables(), other.variables());
  std::vector<int> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same_variables(variables(), other.variables());
  std::vector<int> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_by(const Monomial& other) const {
  check_same_variables(variables(), other.variables());
  std::vector<int> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exponents_[i] - other.exponents_[i], 0);
  return Monomial(std::move(e));
}

Monomial Monomial::times_variable(int index) const {
  auto e = exponents_;
  ++e.at(static_cast<std::size_t>(index));
  return Monomial(std::move(e));
}

std::optional<int> Monomial::pure_power_variable() const {
  std::optional<int> found;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (found) return std::nullopt;
    found = static_cast<int>(i);
  }
  return found;
}

std::string variable_name(int index, int variables) {
  static constexpr const char* kShort[] = {"x", "y", "z", "w"};
  if (variables <= 4) return kShort[index];
  return "x" + std::to_string(index + 1);
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    out += variable_name(static_cast<int>(i), variables());
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialIdeal MonomialIdeal::minimalize(std::vector<Monomial> gens, int variables) {
  for (const auto& g : gens) check_same_variables(g.variables(), variables);
  std::vector<Monomial> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j || !gens[j].divides(gens[i])) continue;
      // Among equal generators keep the first occurrence.
      redundant = gens[j] != gens[i] || j < i;
    }
    if (!redundant) kept.push_back(gens[i]);
  }
  return MonomialIdeal(variables, std::move(kept));
}

MonomialIdeal MonomialIdeal::unit(int variables) { return MonomialIdeal(variables, {Monomial::one(variables)}); }

MonomialIdeal::MonomialIdeal(std::initializer_list<Monomial> gens) {
  if (gens.size() == 0) throw Error(ErrorCode::invalid_input, "use minimalize() for the zero ideal");
  *this = minimalize(std::vector<Monomial>(gens), gens.begin()->variables());
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().degree() == 0; }

bool MonomialIdeal::is_artinian() const {
  if (is_unit()) return true;
  std::vector<bool> seen(static_cast<std::size_t>(variables_), false);
  for (const auto& g : gens_)
    if (auto v = g.pure_power_variable()) seen[static_cast<std::size_t>(*v)] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<int> MonomialIdeal::generator_degrees() const {
  std::vector<int> out;
  for (const auto& g : gens_) out.push_back(g.degree());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> MonomialIdeal::ci_exponents() const {
  if (gens_.size() != static_cast<std::size_t>(variables_)) return std::nullopt;
  std::vector<int> exps(static_cast<std::size_t>(variables_), 0);
  for (const auto& g : gens_) {
    auto v = g.pure_power_variable();
    if (!v || exps[static_cast<std::size_t>(*v)] != 0) return std::nullopt;
    exps[static_cast<std::size_t>(*v)] = g[static_cast<std::size_t>(*v)];
  }
  return exps;
}

int MonomialIdeal::socle_bound() const {
  if (!is_artinian()) throw Error(ErrorCode::infinite_support, "infinite Hilbert function");
  if (is_unit()) return -1;
  std::vector<int> smallest(static_cast<std::size_t>(variables_), 0);
  for (const auto& g : gens_) {
    if (auto v = g.pure_power_variable()) {
      auto& s = smallest[static_cast<std::size_t>(*v)];
      const int e = g[static_cast<std::size_t>(*v)];
      s = s == 0 ? e : std::min(s, e);
    }
  }
  int bound = 0;
  for (int s : smallest) bound += s - 1;
  return bound;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out;
}

bool operator==(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  if (lhs.variables_ != rhs.variables_ || lhs.gens_.size() != rhs.gens_.size()) return false;
  auto a = lhs.gens_;
  auto b = rhs.gens_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int degree) {
  std::vector<Monomial> all;
  if (degree < 0) return all;
  std::vector<int> current(static_cast<std::size_t>(ideal.variables()), 0);
  enumerate_degree(ideal.variables(), degree, current, 0, all);
  std::vector<Monomial> out;
  for (auto& m : all)
    if (!ideal.contains(m)) out.push_back(std::move(m));
  return out;
}

HilbertFunction hilbert_function(const MonomialIdeal& ideal) {
  if (!ideal.is_artinian()) throw Error(ErrorCode::infinite_support, "infinite Hilbert function");
  std::vector<Integer> values;
  for (int n = 0; n <= ideal.socle_bound(); ++n)
    values.emplace_back(static_cast<unsigned long>(standard_monomials(ideal, n).size()));
  return HilbertFunction(std::move(values));
}

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  check_same_variables(lhs.variables(), rhs.variables());
  std::vector<Monomial> gens;
  for (const auto& f : lhs.generators())
    for (const auto& g : rhs.generators()) gens.push_back(f.lcm(g));
  return canonical(std::move(gens), lhs.variables());
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  check_same_variables(ideal.variables(), m.variables());
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.quotient_by(m));
  return canonical(std::move(gens), ideal.variables());
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  check_same_variables(ideal.variables(), by.variables());
  if (by.is_zero()) throw Error(ErrorCode::colon_by_zero, "colon by zero ideal");
  MonomialIdeal out = colon(ideal, by.generators().front());
  for (std::size_t i = 1; i < by.generators().size(); ++i) out = intersect(out, colon(ideal, by.generators()[i]));
  return out;
}

MonomialIdeal aci_construction(const DegreeTuple& degrees, int h) {
  const std::size_t r = degrees.size();
  if (r < 2) throw Error(ErrorCode::invalid_input, "need at least two degrees");
  if (degrees[0] < 2) throw Error(ErrorCode::invalid_input, "all degrees must be >= 2");
  const int low = degrees[r - 1] + 1;
  const int high = degrees[r - 1] + degrees[0] - 1;
  if (h < low || h > high)
    throw Error(ErrorCode::out_of_range, "h outside (" + std::to_string(low) + " .. " + std::to_string(high) + ")");

  const int c = static_cast<int>(r);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i + 1 < r; ++i) gens.push_back(Monomial::pure_power(c, static_cast<int>(i), degrees[i]));
  gens.push_back(Monomial::pure_power(c, c - 1, h));

  std::vector<int> extra(r, 0);
  extra[0] = degrees[0] + degrees[r - 1] - h;
  for (std::size_t i = 1; i + 1 < r; ++i) extra[i] = degrees[i] - degrees[i - 1];
  extra[r - 1] = h - degrees[r - 2];
  gens.emplace_back(std::move(extra));
  return MonomialIdeal::minimalize(std::move(gens), c);
}

MonomialIdeal rigid_aci_witness(int a) {
  if (a < 2) throw Error(ErrorCode::out_of_range, "a must be >= 2");
  return MonomialIdeal{Monomial{a, 0, 0}, Monomial{0, a + 1, 0}, Monomial{0, 0, a}, Monomial{a - 1, 1, 0}};
}

}  // namespace aci
