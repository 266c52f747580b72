#include "aci/linalg.hpp"

#include <utility>

#include "aci/error.hpp"

namespace aci {

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

bool IntegerMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

IntegerMatrix operator*(const IntegerMatrix& lhs, const IntegerMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw Error(ErrorCode::invalid_input, "matrix shapes do not compose");
  IntegerMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      if (lhs(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

std::size_t rank(IntegerMatrix m) {
  // Bareiss: after step k every entry below/right of the pivot is a (k+1)-minor,
  // so the division by the previous pivot is exact.
  Integer previous = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && m(found, col) == 0) ++found;
    if (found == m.rows()) continue;
    swap_rows(m, pivot_row, found);
    const Integer pivot = m(pivot_row, col);
    for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        m(r, c) = pivot * m(r, c) - m(r, col) * m(pivot_row, c);
        mpz_divexact(m(r, c).get_mpz_t(), m(r, c).get_mpz_t(), previous.get_mpz_t());
      }
      m(r, col) = 0;
    }
    previous = pivot;
    ++pivot_row;
  }
  return pivot_row;
}

Integer determinant(IntegerMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::invalid_input, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t found = k;
    while (found < n && m(found, k) == 0) ++found;
    if (found == n) return 0;
    if (found != k) {
      swap_rows(m, k, found);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        m(r, c) = m(k, k) * m(r, c) - m(r, k) * m(k, c);
        mpz_divexact(m(r, c).get_mpz_t(), m(r, c).get_mpz_t(), previous.get_mpz_t());
      }
      m(r, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace aci
