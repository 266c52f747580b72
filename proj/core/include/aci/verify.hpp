#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aci {

struct CheckResult {
  std::string name;
  std::string tag;  // statement exercised, e.g. "ci-sequence-is-aci-sequence"
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Monomial ACI ideals have the CI Hilbert function, for 2 <= a_i <= max_degree.
CheckResult check_aci_sequences(int max_degree);

// (x^{a1}, y^{a2}, z^h) : I_Q is the CI (x^{h-a3}, y^{a1}, z^{a2}) and
// link_hilbert predicts its Hilbert function.
CheckResult check_colon_identity(int max_degree);

// Koszul oracle on (x^a, y^{a+1}, z^a, x^{a-1}y) gives the rigid t = 2 table.
CheckResult check_rigid_resolutions(int max_a);

// Hilbert function, duality, a+h presence, parity and d* for every enumerated table.
CheckResult check_classification(int max_a);

// Largest t over all h equals t_max(a), attained at h = 2a.
CheckResult check_t_max(int max_a);

// cancel_ah succeeds iff t >= 4 and lands on an enumerated odd table.
CheckResult check_ah_cancellation(int max_a);

// H_{CI(a,a,h)}(n) - H_{CI(a,a,a)}(2a+h-3-n) = H_{CI(h-a,a,a)}(n).
CheckResult check_link_identity(int max_a);

// Gaeta conditions on delta_low/delta_high and on fixed positive/negative cases.
CheckResult check_gaeta(int max_a);

// Sub-pfaffian degrees of Alt(delta) for all delta of length <= 7, entries <= 8.
CheckResult check_pfaffian_degrees();

// Pf^2 = det on random integer specializations of sizes 2, 4, 6.
CheckResult check_pf_squared(int samples_per_size, std::uint64_t seed);

// Generator degrees of the a = 3, h = 5 example ideals.
CheckResult check_example_degrees();

// Macaulay2 scripts for the example are lint-clean and byte-stable.
CheckResult check_cas_scripts();

struct VerifyOptions {
  std::string scope = "all";  // monomial | liaison | koszul | classification | pfaffian | all
  int max_degree = 5;
  int max_a = 6;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace aci
