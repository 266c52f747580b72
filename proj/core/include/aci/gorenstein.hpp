#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aci {

// Generator degrees d_1 <= ... <= d_{2n+1} of a codimension-3 Gorenstein ideal.
class GorensteinDelta {
 public:
  explicit GorensteinDelta(std::vector<int> degrees);

  std::span<const int> degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  int n() const noexcept { return static_cast<int>(degrees_.size() / 2); }

  // sum / n when integral.
  std::optional<int> theta() const;

  friend bool operator==(const GorensteinDelta&, const GorensteinDelta&) = default;

 private:
  std::vector<int> degrees_;
};

struct GaetaResult {
  bool ok = false;
  std::string reason;
};

// theta integral and theta > d_i + d_{2n+3-i} for 2 <= i <= n (1-based).
GaetaResult gaeta_check(const GorensteinDelta& delta);

// (h-a, a, a, a+1, ..., h-1), (a+h)/2 doubled when h-a is even; a+1 <= h <= 2a-1.
GorensteinDelta delta_low(int a, int h);

// (a, a, h-a, h-a+1, ..., 2a-1), (a+h)/2 doubled when h-a is even; 2a <= h <= 3a-2.
GorensteinDelta delta_high(int a, int h);

}  // namespace aci
