#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aci/hilbert.hpp"
#include "aci/monomial_ideal.hpp"
#include "aci/pfaffian.hpp"

namespace aci {

// "0 -> R(-7)^2 + R(-8) + R(-9) -> ... -> R"
std::string format_resolution(const BettiTable& table);

// Macaulay2 scripts. Output is a pure function of the input (random choices
// are seeded inside the script), so regenerating yields identical bytes.
std::string macaulay2_monomial_script(const MonomialIdeal& ideal, const std::optional<BettiTable>& expected);

// Reconstructs the ideal in the matrix's ring, maps it to k[x,y,z] through
// random linear forms (artinian reduction) and compares the Betti tally.
std::string macaulay2_pfaffian_script(std::string_view title, const AlternatingMatrix& matrix,
                                      std::span<const Polynomial> generators, const BettiTable& expected);

enum class ExampleVariant { maximal, cancelled };

// The a = 3, h = 5 pfaffian example; maximal has t = 4, cancelled drops R(-8).
std::string macaulay2_example_script(ExampleVariant variant);
BettiTable example_expected_table(ExampleVariant variant);

// Structural lint: balanced brackets, statements terminated by ';', no stray
// characters. Returns one message per problem.
std::vector<std::string> lint_macaulay2(std::string_view script);

}  // namespace aci
