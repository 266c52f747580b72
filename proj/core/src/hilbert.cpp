#include "aci/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "aci/error.hpp"

namespace aci {

namespace {

void trim(std::vector<Integer>& values) {
  while (!values.empty() && values.back() == 0) values.pop_back();
}

std::vector<Integer> convolve(const std::vector<Integer>& lhs, const std::vector<Integer>& rhs) {
  if (lhs.empty() || rhs.empty()) return {};
  std::vector<Integer> out(lhs.size() + rhs.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
  return out;
}

// Exact division by the monic polynomial 1 + t + ... + t^{a-1}; nullopt if
// the remainder is nonzero.
std::optional<std::vector<Integer>> divide_by_block(std::vector<Integer> poly, int a) {
  if (poly.size() < static_cast<std::size_t>(a)) return std::nullopt;
  const std::size_t quotient_size = poly.size() - static_cast<std::size_t>(a) + 1;
  std::vector<Integer> quotient(quotient_size, 0);
  // Divisor is palindromic and monic, so long division from the top is exact.
  for (std::size_t k = quotient_size; k-- > 0;) {
    const Integer coeff = poly[k + static_cast<std::size_t>(a) - 1];
    quotient[k] = coeff;
    for (int i = 0; i < a; ++i) poly[k + static_cast<std::size_t>(i)] -= coeff;
  }
  for (const auto& r : poly)
    if (r != 0) return std::nullopt;
  return quotient;
}

}  // namespace

HilbertFunction::HilbertFunction(std::vector<Integer> values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (v < 0)
      throw Error(ErrorCode::not_hilbert_function, "table not a Hilbert function: negative value");
  trim(values_);
}

HilbertFunction::HilbertFunction(std::initializer_list<long> values)
    : HilbertFunction(std::vector<Integer>(values.begin(), values.end())) {}

Integer HilbertFunction::operator()(long n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= values_.size()) return 0;
  return values_[static_cast<std::size_t>(n)];
}

Integer HilbertFunction::length() const {
  return std::accumulate(values_.begin(), values_.end(), Integer(0));
}

DegreeTuple::DegreeTuple(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  for (int d : degrees_)
    if (d < 1) throw Error(ErrorCode::invalid_input, "degrees must be >= 1");
  std::sort(degrees_.begin(), degrees_.end());
}

DegreeTuple::DegreeTuple(std::initializer_list<int> degrees)
    : DegreeTuple(std::vector<int>(degrees)) {}

int DegreeTuple::sum() const noexcept { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

BettiTable::BettiTable(int variables, Levels levels) : variables_(variables), levels_(std::move(levels)) {
  if (variables_ < 1) throw Error(ErrorCode::invalid_input, "Betti table needs at least one variable");
  if (levels_.size() != static_cast<std::size_t>(variables_) + 1)
    throw Error(ErrorCode::invalid_input,
                "Betti table must have " + std::to_string(variables_ + 1) + " levels");
  for (auto& level : levels_) std::sort(level.begin(), level.end());
  if (levels_[0] != std::vector<int>{0})
    throw Error(ErrorCode::invalid_input, "level 0 must be {0}");
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    if (levels_[i].empty()) {
      throw Error(ErrorCode::invalid_input, "level " + std::to_string(i) + " is empty");
    }
    if (levels_[i].front() <= levels_[i - 1].front())
      throw Error(ErrorCode::invalid_input,
                  "twists at level " + std::to_string(i) +
                      " must exceed the minimum twist of the previous level");
  }
}

BettiTable BettiTable::koszul(const DegreeTuple& degrees) {
  const int r = static_cast<int>(degrees.size());
  Levels levels(static_cast<std::size_t>(r) + 1);
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    int twist = 0;
    int bits = 0;
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) {
        twist += degrees[static_cast<std::size_t>(i)];
        ++bits;
      }
    }
    levels[static_cast<std::size_t>(bits)].push_back(twist);
  }
  return BettiTable(r, std::move(levels));
}

int BettiTable::count(std::size_t level, int twist) const {
  const auto& l = levels_.at(level);
  return static_cast<int>(std::count(l.begin(), l.end(), twist));
}

Integer monomial_count(long n, int variables) {
  if (n < 0) return 0;
  if (variables == 0) return n == 0 ? 1 : 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n) + static_cast<unsigned long>(variables) - 1,
               static_cast<unsigned long>(variables) - 1);
  return out;
}

HilbertFunction ci_hilbert(const DegreeTuple& degrees) {
  std::vector<Integer> poly{1};
  for (int a : degrees.degrees()) poly = convolve(poly, std::vector<Integer>(static_cast<std::size_t>(a), 1));
  return HilbertFunction(std::move(poly));
}

std::vector<Integer> difference(const HilbertFunction& h, int order) {
  if (order < 0) throw Error(ErrorCode::invalid_input, "difference order must be >= 0");
  std::vector<Integer> current = h.values();
  for (int k = 0; k < order; ++k) {
    std::vector<Integer> next(current.size() + 1, 0);
    for (std::size_t n = 0; n < next.size(); ++n) {
      const Integer here = n < current.size() ? current[n] : Integer(0);
      const Integer prev = n > 0 ? current[n - 1] : Integer(0);
      next[n] = here - prev;
    }
    current = std::move(next);
  }
  return current;
}

int socle_degree(const HilbertFunction& h) {
  if (h.is_zero()) throw Error(ErrorCode::empty_algebra, "empty algebra");
  return static_cast<int>(h.size()) - 1;
}

std::vector<Integer> hilbert_prefix_from_levels(int variables, const Levels& levels, int max_degree) {
  std::vector<Integer> out(static_cast<std::size_t>(std::max(max_degree + 1, 0)), 0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int sign = i % 2 == 0 ? 1 : -1;
    for (int twist : levels[i])
      for (int n = twist; n <= max_degree; ++n)
        out[static_cast<std::size_t>(n)] += sign * monomial_count(n - twist, variables);
  }
  return out;
}

HilbertFunction hilbert_from_levels(int variables, const Levels& levels) {
  int max_twist = 0;
  for (const auto& level : levels)
    for (int twist : level) max_twist = std::max(max_twist, twist);
  // Past the largest twist every term is a polynomial of degree < c in n, so
  // c consecutive zeros there force zeros forever.
  auto values = hilbert_prefix_from_levels(variables, levels, max_twist + variables - 1);
  for (int n = max_twist; n <= max_twist + variables - 1; ++n) {
    if (values[static_cast<std::size_t>(n)] != 0)
      throw Error(ErrorCode::infinite_support,
                  "table has infinite support (not an artinian algebra)");
  }
  values.resize(static_cast<std::size_t>(max_twist) + 1);
  return HilbertFunction(std::move(values));
}

HilbertFunction hilbert_from_betti(const BettiTable& table) {
  return hilbert_from_levels(table.variables(), table.levels());
}

std::optional<DegreeTuple> recognize_ci(const HilbertFunction& h) {
  if (h.is_zero() || h(0) != 1) return std::nullopt;
  const Integer r_value = h(1);
  if (!r_value.fits_sint_p()) return std::nullopt;
  const long r = r_value.get_si();
  const int socle = socle_degree(h);
  if (r == 0) {
    if (h == HilbertFunction{1}) return DegreeTuple{};
    return std::nullopt;
  }

  std::vector<int> chosen;
  std::function<bool(const std::vector<Integer>&, int)> search =
      [&](const std::vector<Integer>& poly, int min_a) -> bool {
    if (static_cast<long>(chosen.size()) == r) return poly.size() == 1 && poly[0] == 1;
    const long remaining = r - static_cast<long>(chosen.size());
    // Each remaining factor raises the degree by at least min_a - 1.
    const long degree = static_cast<long>(poly.size()) - 1;
    for (int a = min_a; a <= socle + 1; ++a) {
      if (remaining * (a - 1) > degree) break;
      auto quotient = divide_by_block(poly, a);
      if (!quotient) continue;
      chosen.push_back(a);
      if (search(*quotient, a)) return true;
      chosen.pop_back();
    }
    return false;
  };

  if (!search(h.values(), 2)) return std::nullopt;
  return DegreeTuple(chosen);
}

Integer min_generator_bound(const HilbertFunction& h, int variables, int degree) {
  if (variables < 1) throw Error(ErrorCode::invalid_input, "need at least one variable");
  for (std::size_t n = 0; n < h.size(); ++n) {
    if (h.values()[n] > monomial_count(static_cast<long>(n), variables))
      throw Error(ErrorCode::not_hilbert_function,
                  "not a Hilbert function for " + std::to_string(variables) + " variables");
  }
  auto ideal_dim = [&](long n) -> Integer {
    if (n < 0) return 0;
    return monomial_count(n, variables) - h(n);
  };
  Integer bound = ideal_dim(degree) - variables * ideal_dim(degree - 1);
  return bound < 0 ? Integer(0) : bound;
}

}  // namespace aci
