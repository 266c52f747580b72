#include "aci/gorenstein.hpp"

#include <algorithm>
#include <numeric>

#include "aci/error.hpp"

namespace aci {

GorensteinDelta::GorensteinDelta(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.size() < 3 || degrees_.size() % 2 == 0)
    throw Error(ErrorCode::invalid_input, "Gorenstein degree sequence must have odd length >= 3");
  if (!std::is_sorted(degrees_.begin(), degrees_.end()))
    throw Error(ErrorCode::invalid_input, "Gorenstein degree sequence must be sorted");
  if (degrees_.front() < 1) throw Error(ErrorCode::invalid_input, "degrees must be >= 1");
}

std::optional<int> GorensteinDelta::theta() const {
  const int total = std::accumulate(degrees_.begin(), degrees_.end(), 0);
  if (total % n() != 0) return std::nullopt;
  return total / n();
}

GaetaResult gaeta_check(const GorensteinDelta& delta) {
  const auto theta = delta.theta();
  if (!theta) return {false, "theta = sum/n is not an integer"};
  const int n = delta.n();
  for (int i = 2; i <= n; ++i) {
    const int lhs = delta[static_cast<std::size_t>(i - 1)];
    const int rhs = delta[static_cast<std::size_t>(2 * n + 3 - i - 1)];
    if (*theta <= lhs + rhs)
      return {false, "theta = " + std::to_string(*theta) + " <= d_" + std::to_string(i) + " + d_" +
                         std::to_string(2 * n + 3 - i) + " = " + std::to_string(lhs + rhs)};
  }
  return {true, "theta = " + std::to_string(*theta)};
}

namespace {

GorensteinDelta with_middle(std::vector<int> degrees, int a, int h) {
  if ((h - a) % 2 == 0) degrees.push_back((a + h) / 2);
  std::sort(degrees.begin(), degrees.end());
  return GorensteinDelta(std::move(degrees));
}

}  // namespace

GorensteinDelta delta_low(int a, int h) {
  if (a < 2 || h < a + 1 || h > 2 * a - 1) throw Error(ErrorCode::out_of_range, "need a+1 <= h <= 2a-1");
  std::vector<int> degrees{h - a, a, a};
  for (int d = a + 1; d <= h - 1; ++d) degrees.push_back(d);
  return with_middle(std::move(degrees), a, h);
}

GorensteinDelta delta_high(int a, int h) {
  if (a < 2 || h < 2 * a || h > 3 * a - 2) throw Error(ErrorCode::out_of_range, "need 2a <= h <= 3a-2");
  std::vector<int> degrees{a, a};
  for (int d = h - a; d <= 2 * a - 1; ++d) degrees.push_back(d);
  return with_middle(std::move(degrees), a, h);
}

}  // namespace aci
