#include "aci/pfaffian.hpp"

#include <algorithm>
#include <bit>

#include "aci/error.hpp"

namespace aci {

namespace {

std::string pair_name(std::size_t i, std::size_t j, std::size_t size) {
  if (size <= 9) return "x" + std::to_string(i + 1) + std::to_string(j + 1);
  return "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

std::uint64_t mask_of(std::span<const std::size_t> indices, std::size_t size) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= size) throw Error(ErrorCode::invalid_input, "pfaffian index out of range");
    if (k > 0 && indices[k] <= indices[k - 1])
      throw Error(ErrorCode::invalid_input, "pfaffian indices must be strictly increasing");
    mask |= std::uint64_t{1} << indices[k];
  }
  if (indices.size() % 2 != 0) throw Error(ErrorCode::invalid_input, "pfaffian of an odd-size submatrix");
  return mask;
}

std::vector<std::size_t> indices_of(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (mask & (std::uint64_t{1} << i)) out.push_back(i);
  return out;
}

}  // namespace

AlternatingMatrix::AlternatingMatrix(std::size_t size, VariableList variables)
    : size_(size), variables_(std::move(variables)) {
  if (size_ > 63) throw Error(ErrorCode::instance_too_large, "alternating matrix too large");
  upper_.assign(size_ * (size_ ? size_ - 1 : 0) / 2, Polynomial(variables_));
  degrees_.assign(upper_.size(), std::nullopt);
}

std::size_t AlternatingMatrix::upper_index(std::size_t i, std::size_t j) const {
  // Row-major over the strict upper triangle.
  return i * size_ - i * (i + 1) / 2 + (j - i - 1);
}

Polynomial AlternatingMatrix::entry(std::size_t i, std::size_t j) const {
  if (i >= size_ || j >= size_) throw Error(ErrorCode::invalid_input, "matrix index out of range");
  if (i == j) return Polynomial(variables_);
  if (i < j) return upper_[upper_index(i, j)];
  return -upper_[upper_index(j, i)];
}

void AlternatingMatrix::set_upper(std::size_t i, std::size_t j, Polynomial value) {
  if (i >= j || j >= size_) throw Error(ErrorCode::invalid_input, "set_upper needs i < j < size");
  upper_[upper_index(i, j)] = std::move(value);
}

std::optional<int> AlternatingMatrix::expected_degree(std::size_t i, std::size_t j) const {
  if (i == j) return std::nullopt;
  return degrees_[upper_index(std::min(i, j), std::max(i, j))];
}

void AlternatingMatrix::set_expected_degree(std::size_t i, std::size_t j, int degree) {
  if (i >= j || j >= size_) throw Error(ErrorCode::invalid_input, "set_expected_degree needs i < j < size");
  degrees_[upper_index(i, j)] = degree;
}

IntegerMatrix AlternatingMatrix::specialize(std::span<const Integer> point) const {
  IntegerMatrix out(size_, size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j) {
      const Integer v = upper_[upper_index(i, j)].evaluate(point);
      out(i, j) = v;
      out(j, i) = -v;
    }
  return out;
}

AlternatingMatrix alt_matrix(const GorensteinDelta& delta, std::vector<std::string> extra_variables) {
  const auto theta = delta.theta();
  if (!theta) throw Error(ErrorCode::non_integral, "theta = sum/n is not an integer");
  const std::size_t m = delta.size();

  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (*theta - delta[i] - delta[j] > 0) names.push_back(pair_name(i, j, m));
  const std::size_t pair_count = names.size();
  names.insert(names.end(), extra_variables.begin(), extra_variables.end());
  auto variables = make_variables(std::move(names));

  AlternatingMatrix matrix(m, variables);
  std::size_t next = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const int exponent = *theta - delta[i] - delta[j];
      matrix.set_expected_degree(i, j, exponent);
      if (exponent > 0) matrix.set_upper(i, j, Polynomial::variable(variables, next++, exponent));
    }
  }
  if (next != pair_count) throw Error(ErrorCode::invalid_input, "variable bookkeeping mismatch");
  return matrix;
}

AlternatingMatrix generic_alternating(std::size_t size) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) names.push_back(pair_name(i, j, size));
  auto variables = make_variables(std::move(names));
  AlternatingMatrix matrix(size, variables);
  std::size_t next = 0;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      matrix.set_upper(i, j, Polynomial::variable(variables, next++));
      matrix.set_expected_degree(i, j, 1);
    }
  return matrix;
}

PfaffianExpander::PfaffianExpander(const AlternatingMatrix& matrix) : matrix_(matrix) {}

Polynomial PfaffianExpander::expand(std::uint64_t mask) {
  if (mask == 0) return Polynomial::constant(matrix_.variables(), 1);
  if (auto it = cache_.find(mask); it != cache_.end()) return it->second;

  // Pf = sum_{k >= 2} (-1)^k a_{1k} Pf(minor without 1 and k), positions 1-based.
  const auto idx = indices_of(mask);
  const std::size_t first = idx.front();
  Polynomial total(matrix_.variables());
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const Polynomial a = matrix_.entry(first, idx[k]);
    if (a.is_zero()) continue;
    const std::uint64_t rest = mask & ~(std::uint64_t{1} << first) & ~(std::uint64_t{1} << idx[k]);
    const Polynomial term = a * expand(rest);
    // Position k+1 is even exactly when k is odd.
    if (k % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  cache_.emplace(mask, total);
  return total;
}

Polynomial PfaffianExpander::pfaffian(std::span<const std::size_t> indices) {
  return expand(mask_of(indices, matrix_.size()));
}

Polynomial PfaffianExpander::pfaffian_last_row(std::span<const std::size_t> indices) const {
  mask_of(indices, matrix_.size());
  if (indices.empty()) return Polynomial::constant(matrix_.variables(), 1);
  // Pf = sum_{j < 2m} (-1)^j a_{2m,j} Pf(minor without j and 2m), positions 1-based.
  const std::size_t last = indices.back();
  Polynomial total(matrix_.variables());
  for (std::size_t j = 0; j + 1 < indices.size(); ++j) {
    const Polynomial a = matrix_.entry(last, indices[j]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k + 1 < indices.size(); ++k)
      if (k != j) rest.push_back(indices[k]);
    const Polynomial term = a * pfaffian_last_row(rest);
    if ((j + 1) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Polynomial PfaffianExpander::pfaffian_deleting(std::span<const std::size_t> deleted) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < matrix_.size(); ++i)
    if (std::find(deleted.begin(), deleted.end(), i) == deleted.end()) kept.push_back(i);
  if (kept.size() + deleted.size() != matrix_.size())
    throw Error(ErrorCode::invalid_input, "deleted indices must be distinct and in range");
  return pfaffian(kept);
}

Polynomial pfaffian(const AlternatingMatrix& matrix, std::span<const std::size_t> indices) {
  PfaffianExpander expander(matrix);
  return expander.pfaffian(indices);
}

std::vector<Polynomial> sub_pfaffians(const AlternatingMatrix& matrix) {
  if (matrix.size() % 2 == 0) throw Error(ErrorCode::invalid_input, "submaximal pfaffians need odd size");
  PfaffianExpander expander(matrix);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const std::size_t deleted[] = {i};
    out.push_back(expander.pfaffian_deleting(deleted));
  }
  return out;
}

bool pf_squared_equals_det(const AlternatingMatrix& matrix, std::span<const Integer> point) {
  if (matrix.size() % 2 != 0) throw Error(ErrorCode::invalid_input, "Pf^2 = det needs even size");
  std::vector<std::size_t> all(matrix.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const Integer pf = pfaffian(matrix, all).evaluate(point);
  return pf * pf == determinant(matrix.specialize(point));
}

ExampleIdeals example_ideals_a3_h5() {
  AlternatingMatrix matrix = alt_matrix(GorensteinDelta({2, 3, 3, 4, 4}), {"y1", "y2"});
  const auto& vars = matrix.variables();
  const Polynomial y1 = Polynomial::variable(vars, vars->size() - 2);
  const Polynomial y2 = Polynomial::variable(vars, vars->size() - 1);

  PfaffianExpander expander(matrix);
  auto p = [&](std::initializer_list<std::size_t> one_based) {
    std::vector<std::size_t> deleted;
    for (std::size_t i : one_based) deleted.push_back(i - 1);
    return expander.pfaffian_deleting(deleted);
  };

  std::vector<Polynomial> iq{y2 * p({1}), p({2}), y1 * p({5}), y1 * y2 * p({1, 2, 5})};
  std::vector<Polynomial> iw{p({2}), p({3}), y1 * p({5}), y1 * p({2, 3, 5})};
  return ExampleIdeals{std::move(matrix), std::move(iq), std::move(iw)};
}

}  // namespace aci
