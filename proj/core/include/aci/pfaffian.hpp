#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "aci/gorenstein.hpp"
#include "aci/linalg.hpp"
#include "aci/polynomial.hpp"

namespace aci {

// Skew-symmetric matrix with polynomial entries. Only i < j is stored;
// a_ji = -a_ij and a_ii = 0 hold by construction. Indices are 0-based.
class AlternatingMatrix {
 public:
  AlternatingMatrix(std::size_t size, VariableList variables);

  std::size_t size() const noexcept { return size_; }
  const VariableList& variables() const noexcept { return variables_; }

  Polynomial entry(std::size_t i, std::size_t j) const;
  void set_upper(std::size_t i, std::size_t j, Polynomial value);

  // Degree every nonzero entry is expected to have, when recorded.
  std::optional<int> expected_degree(std::size_t i, std::size_t j) const;
  void set_expected_degree(std::size_t i, std::size_t j, int degree);

  // Integer matrix obtained by substituting point[k] for variable k.
  IntegerMatrix specialize(std::span<const Integer> point) const;

 private:
  std::size_t upper_index(std::size_t i, std::size_t j) const;

  std::size_t size_;
  VariableList variables_;
  std::vector<Polynomial> upper_;
  std::vector<std::optional<int>> degrees_;
};

// Alt(delta): a_ij = x_ij^{theta - d_i - d_j} when the exponent is positive,
// zero otherwise. Variables are x_ij (i < j, positive exponent) in
// lexicographic order, followed by extra_variables.
AlternatingMatrix alt_matrix(const GorensteinDelta& delta, std::vector<std::string> extra_variables = {});

// Fully generic alternating matrix: a_ij = x_ij for all i < j.
AlternatingMatrix generic_alternating(std::size_t size);

// Pfaffians of principal submatrices, memoized on the index subset.
class PfaffianExpander {
 public:
  explicit PfaffianExpander(const AlternatingMatrix& matrix);

  // Pf of the submatrix on sorted indices; first-row expansion. Empty -> 1.
  Polynomial pfaffian(std::span<const std::size_t> indices);
  // Same value by expansion along the last row; no memoization.
  Polynomial pfaffian_last_row(std::span<const std::size_t> indices) const;

  // Pf of the matrix with the given rows and columns removed.
  Polynomial pfaffian_deleting(std::span<const std::size_t> deleted);

 private:
  Polynomial expand(std::uint64_t mask);

  const AlternatingMatrix& matrix_;
  std::unordered_map<std::uint64_t, Polynomial> cache_;
};

Polynomial pfaffian(const AlternatingMatrix& matrix, std::span<const std::size_t> indices);

// p_1..p_m with p_i the pfaffian after deleting row and column i.
std::vector<Polynomial> sub_pfaffians(const AlternatingMatrix& matrix);

// Pf(M)^2 == det(M) for the integer specialization at point.
bool pf_squared_equals_det(const AlternatingMatrix& matrix, std::span<const Integer> point);

// Generators of the two almost complete intersections built from
// Alt(2,3,3,4,4) over k[x_ij, y1, y2] for a = 3, h = 5:
//   iq = (y2 p_1, p_2, y1 p_5, y1 y2 p_{1,2,5})   (t = 4, maximal)
//   iw = (p_2, p_3, y1 p_5, y1 p_{2,3,5})          (R(-8) cancelled, t = 3)
struct ExampleIdeals {
  AlternatingMatrix matrix;
  std::vector<Polynomial> iq;
  std::vector<Polynomial> iw;
};

ExampleIdeals example_ideals_a3_h5();

}  // namespace aci
