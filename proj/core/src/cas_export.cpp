#include "aci/cas_export.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "aci/error.hpp"

namespace aci {

namespace {

std::string free_module(const std::vector<int>& twists) {
  std::map<int, int> counts;
  for (int t : twists) ++counts[t];
  std::string out;
  for (const auto& [twist, count] : counts) {
    if (!out.empty()) out += " + ";
    out += twist == 0 ? std::string("R") : "R(-" + std::to_string(twist) + ")";
    if (count > 1) out += "^" + std::to_string(count);
  }
  return out;
}

std::string betti_tally(const BettiTable& table) {
  std::string out = "new BettiTally from {";
  bool first = true;
  for (std::size_t i = 0; i < table.levels().size(); ++i) {
    std::map<int, int> counts;
    for (int t : table.level(i)) ++counts[t];
    for (const auto& [twist, count] : counts) {
      if (!first) out += ", ";
      first = false;
      out += "(" + std::to_string(i) + ",{" + std::to_string(twist) + "}," + std::to_string(twist) + ") => " +
             std::to_string(count);
    }
  }
  return out + "}";
}

void comment_block(std::ostringstream& out, const BettiTable& expected) {
  out << "-- expected minimal graded free resolution:\n";
  out << "--   " << format_resolution(expected) << "\n";
}

}  // namespace

std::string format_resolution(const BettiTable& table) {
  std::string out = "0";
  for (std::size_t i = table.levels().size(); i-- > 0;) out += " -> " + free_module(table.level(i));
  return out;
}

std::string macaulay2_monomial_script(const MonomialIdeal& ideal, const std::optional<BettiTable>& expected) {
  if (ideal.is_zero()) throw Error(ErrorCode::unsupported, "cannot export the zero ideal");
  std::ostringstream out;
  out << "-- monomial ideal " << ideal.to_string() << "\n";
  if (expected) comment_block(out, *expected);
  out << "S = QQ[";
  for (int i = 0; i < ideal.variables(); ++i) out << (i ? "," : "") << variable_name(i, ideal.variables());
  out << "];\n";
  out << "I = monomialIdeal(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    const Monomial& g = ideal.generators()[i];
    std::string product;
    for (int v = 0; v < g.variables(); ++v) {
      const int e = g[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (!product.empty()) product += "*";
      product += variable_name(v, g.variables());
      if (e > 1) product += "^" + std::to_string(e);
    }
    if (product.empty()) product = "1_S";
    out << (i ? ", " : "") << product;
  }
  out << ");\n";
  out << "B = betti res I;\n";
  out << "print B;\n";
  if (expected) {
    out << "expected = " << betti_tally(*expected) << ";\n";
    out << "print(B == expected);\n";
  }
  return out.str();
}

std::string macaulay2_pfaffian_script(std::string_view title, const AlternatingMatrix& matrix,
                                      std::span<const Polynomial> generators, const BettiTable& expected) {
  if (generators.empty()) throw Error(ErrorCode::unsupported, "no generators to export");
  const auto& vars = *matrix.variables();
  std::ostringstream out;
  out << "-- " << title << "\n";
  comment_block(out, expected);
  out << "setRandomSeed 0;\n";
  out << "S = QQ[";
  for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? "," : "") << vars[i];
  out << "];\n";
  out << "A = matrix{";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << (i ? ",\n  " : "") << "{";
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      const Polynomial e = matrix.entry(i, j);
      out << (j ? ", " : "") << e.to_string();
    }
    out << "}";
  }
  out << "};\n";
  out << "I = ideal(";
  for (std::size_t i = 0; i < generators.size(); ++i) out << (i ? ",\n  " : "") << generators[i].to_string();
  out << ");\n";
  out << "T = QQ[x,y,z];\n";
  out << "phi = map(T, S, random(T^1, T^{" << vars.size() << ":-1}));\n";
  out << "J = phi I;\n";
  out << "B = betti res J;\n";
  out << "print B;\n";
  out << "expected = " << betti_tally(expected) << ";\n";
  out << "print(B == expected);\n";
  return out.str();
}

BettiTable example_expected_table(ExampleVariant variant) {
  if (variant == ExampleVariant::maximal)
    return BettiTable(3, {{0}, {3, 3, 3, 5}, {5, 6, 6, 6, 7, 7, 8}, {7, 7, 8, 9}});
  return BettiTable(3, {{0}, {3, 3, 3, 5}, {5, 6, 6, 6, 7, 7}, {7, 7, 9}});
}

std::string macaulay2_example_script(ExampleVariant variant) {
  const ExampleIdeals ideals = example_ideals_a3_h5();
  if (variant == ExampleVariant::maximal)
    return macaulay2_pfaffian_script("a = 3, h = 5: I_Q = (y2 p1, p2, y1 p5, y1 y2 p125) from Alt(2,3,3,4,4)",
                                     ideals.matrix, ideals.iq, example_expected_table(variant));
  return macaulay2_pfaffian_script("a = 3, h = 5: I_W = (p2, p3, y1 p5, y1 p235) from Alt(2,3,3,4,4)",
                                   ideals.matrix, ideals.iw, example_expected_table(variant));
}

std::vector<std::string> lint_macaulay2(std::string_view script) {
  std::vector<std::string> problems;
  std::vector<char> stack;
  std::string statement;
  std::size_t line_number = 0;
  std::istringstream lines{std::string(script)};
  std::string line;
  while (std::getline(lines, line)) {
    ++line_number;
    if (line.rfind("--", 0) == 0 || line.empty()) continue;
    for (char ch : line) {
      if (ch == '(' || ch == '{' || ch == '[') {
        stack.push_back(ch);
      } else if (ch == ')' || ch == '}' || ch == ']') {
        const char open = ch == ')' ? '(' : ch == '}' ? '{' : '[';
        if (stack.empty() || stack.back() != open) {
          problems.push_back("line " + std::to_string(line_number) + ": unbalanced '" + std::string(1, ch) + "'");
          return problems;
        }
        stack.pop_back();
      } else if (!(std::isalnum(static_cast<unsigned char>(ch)) || std::string_view(" ,;:=>^*+-_.\"").find(ch) != std::string_view::npos)) {
        problems.push_back("line " + std::to_string(line_number) + ": unexpected character '" + std::string(1, ch) + "'");
      }
    }
    if (stack.empty() && line.back() != ';')
      problems.push_back("line " + std::to_string(line_number) + ": statement not terminated by ';'");
  }
  if (!stack.empty()) problems.push_back("unclosed bracket at end of script");
  return problems;
}

}  // namespace aci
