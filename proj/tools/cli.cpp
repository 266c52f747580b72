#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aci/cas_export.hpp"
#include "aci/classification.hpp"
#include "aci/error.hpp"
#include "aci/gorenstein.hpp"
#include "aci/json_io.hpp"
#include "aci/koszul_betti.hpp"
#include "aci/liaison.hpp"
#include "aci/monomial_ideal.hpp"
#include "aci/pfaffian.hpp"
#include "aci/verify.hpp"

namespace aci::cli {

namespace {

using nlohmann::json;

// Directory for files written by `export cas`.
constexpr const char* kOutputDirEnv = "ACIKIT_OUT_DIR";

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

std::vector<Integer> to_integers(const std::vector<long>& values) {
  return std::vector<Integer>(values.begin(), values.end());
}

json parse_json_argument(const std::string& inline_text, const std::string& path, const char* what) {
  std::string text = inline_text;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::invalid_input, std::string("cannot read ") + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  if (text.empty()) throw Error(ErrorCode::invalid_input, std::string("missing ") + what);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::invalid_input, std::string("malformed ") + what + ": " + e.what());
  }
}

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw Error(ErrorCode::invalid_input, "parity must be even or odd");
}

CommandResult ok(json payload, std::vector<std::string> provenance, std::string text = {}) {
  CommandResult r;
  r.payload = std::move(payload);
  r.provenance = std::move(provenance);
  r.text = text.empty() ? r.payload.dump() : std::move(text);
  return r;
}

CommandResult failure(std::string code, std::string message) {
  CommandResult r;
  r.ok = false;
  r.error_code = std::move(code);
  r.message = std::move(message);
  return r;
}

struct Options {
  std::vector<int> degrees;
  std::vector<int> z;
  std::vector<int> delta;
  std::vector<int> deleted;
  std::vector<long> hilbert;
  std::string table;
  std::string table_file;
  std::string ideal;
  std::string ideal_file;
  std::string by_ideal;
  std::string expect;
  std::string parity = "even";
  std::string kind;
  std::string out;
  std::string scope = "all";
  int h = 0;
  int a = 0;
  int order = 1;
  int variables = 3;
  int degree = 0;
  int sub = 0;
  int witness = 0;
  int max_degree = 5;
  int max_a = 6;
  bool verify = false;
  bool lax = false;
};

MonomialIdeal ideal_argument(const Options& o) {
  if (o.witness > 0) return rigid_aci_witness(o.witness);
  if (!o.degrees.empty()) return aci_construction(DegreeTuple(o.degrees), o.h);
  return ideal_from_json(parse_json_argument(o.ideal, o.ideal_file, "ideal"));
}

// --- hf -------------------------------------------------------------------

CommandResult hf_ci(const Options& o) {
  return ok(to_json(ci_hilbert(DegreeTuple(o.degrees))), {"ci-hilbert-function"});
}

CommandResult hf_diff(const Options& o) {
  return ok(to_json(difference(HilbertFunction(to_integers(o.hilbert)), o.order)), {"hilbert-difference"});
}

CommandResult hf_from_betti(const Options& o) {
  const BettiTable table = betti_table_from_json(parse_json_argument(o.table, o.table_file, "Betti table"));
  return ok(to_json(hilbert_from_betti(table)), {"betti-determine-hilbert"});
}

CommandResult hf_recognize(const Options& o) {
  const auto found = recognize_ci(HilbertFunction(to_integers(o.hilbert)));
  if (!found) return ok(nullptr, {"ci-recognition"}, "none");
  return ok(to_json(*found), {"ci-recognition"});
}

CommandResult hf_mingens(const Options& o) {
  const Integer bound = min_generator_bound(HilbertFunction(to_integers(o.hilbert)), o.variables, o.degree);
  return ok(to_json(bound), {"generator-lower-bound"});
}

// --- aci ------------------------------------------------------------------

CommandResult aci_monomial(const Options& o) {
  const DegreeTuple degrees(o.degrees);
  const MonomialIdeal ideal = aci_construction(degrees, o.h);
  json payload{{"ideal", to_json(ideal)}, {"display", ideal.to_string()}};
  std::string text = ideal.to_string();
  if (o.verify) {
    const HilbertFunction hf = hilbert_function(ideal);
    const bool matches = hf == ci_hilbert(degrees);
    payload["hilbert"] = to_json(hf);
    payload["matches_ci"] = matches;
    text += "\nHF matches CI(" + join(std::vector<int>(degrees.degrees().begin(), degrees.degrees().end())) +
            "): " + (matches ? "true" : "false");
  }
  return ok(payload, {"ci-sequence-is-aci-sequence"}, text);
}

CommandResult aci_witness(const Options& o) {
  const MonomialIdeal ideal = rigid_aci_witness(o.a);
  return ok(json{{"ideal", to_json(ideal)}, {"display", ideal.to_string()}}, {"rigid-resolution-h-a-plus-1"},
            ideal.to_string());
}

CommandResult aci_colon(const Options& o) {
  const MonomialIdeal ideal = ideal_from_json(parse_json_argument(o.ideal, o.ideal_file, "ideal"));
  const MonomialIdeal by = ideal_from_json(parse_json_argument(o.by_ideal, "", "--by ideal"));
  const MonomialIdeal result = colon(ideal, by);
  return ok(json{{"ideal", to_json(result)}, {"display", result.to_string()}}, {"colon-ideal-link"},
            result.to_string());
}

// --- betti ----------------------------------------------------------------

CommandResult betti_oracle(const Options& o) {
  const MonomialIdeal ideal = ideal_argument(o);
  const BettiTable table = betti_numbers(ideal);
  json payload{{"ideal", ideal.to_string()}, {"table", to_json(table)}};
  std::string text = to_json(table).dump() + "\n" + format_resolution(table);
  if (!o.expect.empty()) {
    const BettiTable expected = betti_table_from_json(parse_json_argument(o.expect, "", "expected table"));
    const auto diff = table_differences(table, expected);
    payload["matches"] = diff.empty();
    payload["differences"] = diff;
    text += std::string("\nmatches expected: ") + (diff.empty() ? "true" : "false");
    for (const auto& line : diff) text += "\n  " + line;
  }
  return ok(payload, {"koszul-homology-betti"}, text);
}

// --- liaison --------------------------------------------------------------

CommandResult liaison_link(const Options& o) {
  const DegreeTuple z(o.z);
  const LinkDatum link = LinkDatum::of(z);
  const HilbertFunction hg =
      link_hilbert(z, HilbertFunction(to_integers(o.hilbert)), o.lax ? LinkMode::lax : LinkMode::strict);
  json payload{{"hg", to_json(hg)}, {"e", link.socle}, {"theta", link.theta}};
  return ok(payload, {"link-hilbert-function"},
            "H_G = " + to_json(hg).dump() + "\ne = " + std::to_string(link.socle) + "\ntheta = " +
                std::to_string(link.theta));
}

CommandResult liaison_cone(const Options& o) {
  const BettiTable table = betti_table_from_json(parse_json_argument(o.table, o.table_file, "Betti table"));
  const MappingCone cone = mapping_cone_twists(table, DegreeTuple(o.z));
  return ok(to_json(cone), {"mapping-cone"}, to_json(cone).dump(2));
}

// --- classify -------------------------------------------------------------

CommandResult classify_tables(const Options& o) {
  const TablePoset poset = enumerate_tables(o.a, o.h);
  return ok(to_json(poset), {"maximal-tables", "allowed-cancellations", "a-plus-h-cancellation"},
            to_json(poset).dump(2));
}

CommandResult classify_tmax(const Options& o) {
  const int formula = t_max(o.a);
  int best = 0;
  std::vector<int> attained;
  for (int h = o.a + 1; h <= 3 * o.a - 2; ++h) {
    for (const auto& ct : enumerate_tables(o.a, h).tables) {
      if (ct.t() > best) {
        best = ct.t();
        attained.clear();
      }
      if (ct.t() == best && (attained.empty() || attained.back() != h)) attained.push_back(h);
    }
  }
  json payload{{"t_max", formula}, {"enumerated_max", best}, {"attained_at_h", attained}};
  auto result = ok(payload, {"t-max"}, std::to_string(formula));
  if (best != formula)
    result.text += "\nwarning: enumerated tables reach t = " + std::to_string(best) + " (h = " + join(attained) + ")";
  return result;
}

CommandResult classify_dstar(const Options& o) {
  int t = 0;
  Parity parity = parse_parity(o.parity);
  if (!o.table.empty() || !o.table_file.empty()) {
    const BettiTable table = betti_table_from_json(parse_json_argument(o.table, o.table_file, "Betti table"));
    t = table.last_syzygies();
    parity = t % 2 == 0 ? Parity::even : Parity::odd;
    const ClassifiedTable ct{table, AciFamily::make(o.a, o.h, parity)};
    return ok(json{{"d_star", d_star(ct)}, {"t", t}}, {"d-star"}, std::to_string(d_star(ct)));
  }
  const ClassifiedTable ct = maximal_table(AciFamily::make(o.a, o.h, parity));
  return ok(json{{"d_star", d_star(ct)}, {"t", ct.t()}}, {"d-star"}, std::to_string(d_star(ct)));
}

CommandResult classify_maximal(const Options& o) {
  const ClassifiedTable ct = maximal_table(AciFamily::make(o.a, o.h, parse_parity(o.parity)));
  json payload = to_json(ct);
  json couples = json::array();
  for (const auto& c : allowed_couples(ct.family)) couples.push_back({c.twist, c.partner});
  payload["allowed_couples"] = couples;
  return ok(payload, {"maximal-tables", "allowed-cancellations"},
            payload.dump() + "\n" + format_resolution(ct.table));
}

// --- gorenstein -----------------------------------------------------------

CommandResult gorenstein_gaeta(const Options& o) {
  const GaetaResult r = gaeta_check(GorensteinDelta(o.delta));
  return ok(json{{"ok", r.ok}, {"reason", r.reason}}, {"gaeta-conditions"},
            std::string(r.ok ? "true" : "false") + " (" + r.reason + ")");
}

CommandResult gorenstein_delta(const Options& o, bool low) {
  const GorensteinDelta d = low ? delta_low(o.a, o.h) : delta_high(o.a, o.h);
  const std::vector<int> degrees(d.degrees().begin(), d.degrees().end());
  return ok(json(degrees), {"linked-gorenstein-degrees"});
}

// --- pfaffian -------------------------------------------------------------

json matrix_json(const AlternatingMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.entry(i, j).to_string());
    rows.push_back(row);
  }
  return json{{"size", m.size()}, {"variables", *m.variables()}, {"entries", rows}};
}

CommandResult pfaffian_alt(const Options& o) {
  const AlternatingMatrix m = alt_matrix(GorensteinDelta(o.delta));
  if (o.sub > 0) {
    if (static_cast<std::size_t>(o.sub) > m.size()) throw Error(ErrorCode::invalid_input, "--sub out of range");
    const Polynomial p = sub_pfaffians(m)[static_cast<std::size_t>(o.sub) - 1];
    return ok(to_json(p), {"alt-delta-pfaffians"}, p.to_string());
  }
  const json payload = matrix_json(m);
  std::string text;
  for (const auto& row : payload["entries"]) {
    for (std::size_t j = 0; j < row.size(); ++j) text += (j ? "  " : "") + row[j].get<std::string>();
    text += "\n";
  }
  text.pop_back();
  return ok(payload, {"alt-delta-matrix"}, text);
}

CommandResult pfaffian_sub(const Options& o) {
  const AlternatingMatrix m = alt_matrix(GorensteinDelta(o.delta));
  std::vector<std::size_t> deleted;
  for (int i : o.deleted) {
    if (i < 1) throw Error(ErrorCode::invalid_input, "--delete indices are 1-based");
    deleted.push_back(static_cast<std::size_t>(i) - 1);
  }
  PfaffianExpander expander(m);
  const Polynomial p = expander.pfaffian_deleting(deleted);
  return ok(to_json(p), {"alt-delta-pfaffians"}, p.to_string());
}

CommandResult pfaffian_example(const Options&) {
  const ExampleIdeals ex = example_ideals_a3_h5();
  auto list = [](const std::vector<Polynomial>& gens, std::string& text) {
    json out = json::array();
    for (const auto& g : gens) {
      out.push_back(json{{"polynomial", to_json(g)}, {"degree", *g.homogeneous_degree()}});
      text += "  [" + std::to_string(*g.homogeneous_degree()) + "] " + g.to_string() + "\n";
    }
    return out;
  };
  std::string text = "I_Q:\n";
  json iq = list(ex.iq, text);
  text += "I_W:\n";
  json iw = list(ex.iw, text);
  text.pop_back();
  return ok(json{{"matrix", matrix_json(ex.matrix)}, {"iq", iq}, {"iw", iw}}, {"worked-example-a3-h5"}, text);
}

// --- export / verify ------------------------------------------------------

CommandResult export_cas(const Options& o) {
  std::string script;
  if (o.kind == "example-maximal") {
    script = macaulay2_example_script(ExampleVariant::maximal);
  } else if (o.kind == "example-cancelled") {
    script = macaulay2_example_script(ExampleVariant::cancelled);
  } else if (o.kind == "monomial") {
    std::optional<BettiTable> expected;
    if (!o.expect.empty()) expected = betti_table_from_json(parse_json_argument(o.expect, "", "expected table"));
    script = macaulay2_monomial_script(ideal_argument(o), expected);
  } else {
    throw Error(ErrorCode::unsupported, "unsupported payload kind: " + o.kind);
  }

  json payload{{"kind", o.kind}, {"bytes", script.size()}};
  if (o.out.empty()) return ok(payload, {"external-cas-export"}, script);

  std::filesystem::path path(o.out);
  if (const char* dir = std::getenv(kOutputDirEnv); dir && path.is_relative()) path = std::filesystem::path(dir) / path;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::invalid_input, "cannot write " + path.string());
  file << script;
  payload["path"] = path.string();
  return ok(payload, {"external-cas-export"}, "wrote " + path.string());
}

CommandResult verify(const Options& o) {
  VerifyOptions options;
  options.scope = o.scope;
  options.max_degree = o.max_degree;
  options.max_a = o.max_a;
  const auto checks = run_verification(options);

  json report = json::array();
  std::vector<std::string> tags;
  std::string text;
  bool all_passed = true;
  for (const auto& c : checks) {
    report.push_back(json{{"name", c.name}, {"tag", c.tag}, {"passed", c.passed}, {"detail", c.detail}});
    tags.push_back(c.tag);
    text += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.tag + "  " + c.name + " (" + c.detail + ")\n";
    all_passed = all_passed && c.passed;
  }
  if (!text.empty()) text.pop_back();
  auto result = ok(json{{"scope", o.scope}, {"passed", all_passed}, {"checks", report}}, tags, text);
  if (!all_passed) {
    result.ok = false;
    result.error_code = "verification_failed";
    result.message = "one or more checks failed";
  }
  return result;
}

}  // namespace

json CommandResult::envelope() const {
  json out{{"status", ok ? "ok" : "error"}, {"provenance", provenance}};
  if (!payload.is_null() || ok) out["payload"] = payload;
  if (!ok) out["error"] = json{{"code", error_code}, {"message", message}};
  return out;
}

CommandResult run(const std::vector<std::string>& argv) {
  CLI::App app{"Hilbert functions and Betti tables of codimension-3 almost complete intersections", "acikit"};
  app.set_help_flag("--help", "Print help and exit");  // -h is taken by --h
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the full JSON result envelope");

  Options o;
  std::function<CommandResult(const Options&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<CommandResult(const Options&)> fn) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  CLI::App* hf = group("hf", "Hilbert function arithmetic");
  leaf(hf, "ci", "Hilbert function of a complete intersection", hf_ci)
      ->add_option("--degrees", o.degrees, "Generator degrees")->delimiter(',')->required();
  {
    auto* c = leaf(hf, "diff", "k-fold first difference", hf_diff);
    c->add_option("--h", o.hilbert, "Hilbert function")->delimiter(',')->required();
    c->add_option("--order", o.order, "Difference order")->check(CLI::NonNegativeNumber);
  }
  {
    auto* c = leaf(hf, "from-betti", "Hilbert function determined by a Betti table", hf_from_betti);
    c->add_option("--table", o.table, "Betti table JSON");
    c->add_option("--file", o.table_file, "File holding the Betti table JSON");
  }
  leaf(hf, "recognize", "Recover complete-intersection degrees", hf_recognize)
      ->add_option("--h", o.hilbert, "Hilbert function")->delimiter(',')->required();
  {
    auto* c = leaf(hf, "mingens", "Lower bound on minimal generators in one degree", hf_mingens);
    c->add_option("--h", o.hilbert, "Hilbert function")->delimiter(',')->required();
    c->add_option("--c", o.variables, "Number of variables");
    c->add_option("--degree", o.degree, "Generator degree")->required();
  }

  CLI::App* aci_group = group("aci", "Monomial almost complete intersections");
  {
    auto* c = leaf(aci_group, "monomial", "Monomial ACI with the Hilbert function of CI(degrees)", aci_monomial);
    c->add_option("--degrees", o.degrees, "CI degrees")->delimiter(',')->required();
    c->add_option("--h", o.h, "Degree of the extra pure power")->required();
    c->add_flag("--verify", o.verify, "Compare its Hilbert function with the CI");
  }
  leaf(aci_group, "witness", "(x^a, y^(a+1), z^a, x^(a-1)y)", aci_witness)->add_option("--a", o.a)->required();
  {
    auto* c = leaf(aci_group, "colon", "Monomial colon ideal I : J", aci_colon);
    c->add_option("--ideal", o.ideal, "Ideal JSON");
    c->add_option("--file", o.ideal_file, "File holding the ideal JSON");
    c->add_option("--by", o.by_ideal, "Ideal JSON to divide by")->required();
  }

  CLI::App* betti = group("betti", "Koszul-homology Betti numbers");
  {
    auto* c = leaf(betti, "oracle", "Graded Betti numbers of an artinian monomial ideal", betti_oracle);
    c->add_option("--ideal", o.ideal, "Ideal JSON");
    c->add_option("--file", o.ideal_file, "File holding the ideal JSON");
    c->add_option("--degrees", o.degrees, "Use the monomial ACI for these degrees")->delimiter(',');
    c->add_option("--h", o.h, "Extra degree for --degrees");
    c->add_option("--witness", o.witness, "Use (x^a, y^(a+1), z^a, x^(a-1)y) for this a");
    c->add_option("--expect", o.expect, "Expected Betti table JSON");
  }

  CLI::App* liaison = group("liaison", "Linkage in a complete intersection");
  {
    auto* c = leaf(liaison, "link", "Hilbert function of the linked ideal", liaison_link);
    c->add_option("--z", o.z, "CI degrees of the linking ideal")->delimiter(',')->required();
    c->add_option("--hq", o.hilbert, "Hilbert function of R/I_Q")->delimiter(',')->required();
    c->add_flag("--lax", o.lax, "Accept the zero function (I_Q = I_Z)");
  }
  {
    auto* c = leaf(liaison, "cone", "Mapping-cone twists of the linked ideal", liaison_cone);
    c->add_option("--table", o.table, "Betti table JSON of R/I_Q");
    c->add_option("--file", o.table_file, "File holding the Betti table JSON");
    c->add_option("--z", o.z, "CI degrees of the linking ideal")->delimiter(',')->required();
  }

  CLI::App* classify = group("classify", "Betti tables of ACIs with Hilbert function H_CI(a,a,a)");
  {
    auto* c = leaf(classify, "tables", "All tables and cancellation edges for (a, h)", classify_tables);
    c->add_option("--a", o.a)->required();
    c->add_option("--h", o.h)->required();
  }
  leaf(classify, "tmax", "Maximum number of last syzygies", classify_tmax)->add_option("--a", o.a)->required();
  {
    auto* c = leaf(classify, "dstar", "Distinguished generator degree d*", classify_dstar);
    c->add_option("--a", o.a)->required();
    c->add_option("--h", o.h)->required();
    c->add_option("--parity", o.parity, "Parity of t (even|odd) when no table is given");
    c->add_option("--table", o.table, "Betti table JSON");
  }
  {
    auto* c = leaf(classify, "maximal", "Maximal table and allowed couples of a family", classify_maximal);
    c->add_option("--a", o.a)->required();
    c->add_option("--h", o.h)->required();
    c->add_option("--parity", o.parity, "even|odd");
  }

  CLI::App* gorenstein = group("gorenstein", "Codimension-3 Gorenstein degree sequences");
  leaf(gorenstein, "gaeta", "Check the Gaeta conditions", gorenstein_gaeta)
      ->add_option("--delta", o.delta)->delimiter(',')->required();
  for (bool low : {true, false}) {
    auto* c = leaf(gorenstein, low ? "delta-low" : "delta-high",
                   low ? "Linked Gorenstein degrees for a+1 <= h <= 2a-1" : "Linked Gorenstein degrees for 2a <= h <= 3a-2",
                   [low](const Options& opts) { return gorenstein_delta(opts, low); });
    c->add_option("--a", o.a)->required();
    c->add_option("--h", o.h)->required();
  }

  CLI::App* pf = group("pfaffian", "Alt(delta) matrices and their pfaffians");
  {
    auto* c = leaf(pf, "alt", "Print Alt(delta) or one sub-pfaffian", pfaffian_alt);
    c->add_option("--delta", o.delta)->delimiter(',')->required();
    c->add_option("--sub", o.sub, "1-based index i of p_i");
  }
  {
    auto* c = leaf(pf, "sub", "Pfaffian after deleting rows/columns", pfaffian_sub);
    c->add_option("--delta", o.delta)->delimiter(',')->required();
    c->add_option("--delete", o.deleted, "1-based indices to delete")->delimiter(',')->required();
  }
  leaf(pf, "example", "Generators of the a = 3, h = 5 example ideals", pfaffian_example);

  CLI::App* exp = group("export", "Scripts for external computer algebra systems");
  {
    auto* c = leaf(exp, "cas", "Macaulay2 script", export_cas);
    c->add_option("--kind", o.kind, "example-maximal | example-cancelled | monomial")->required();
    c->add_option("--ideal", o.ideal, "Ideal JSON (monomial)");
    c->add_option("--file", o.ideal_file, "File holding the ideal JSON (monomial)");
    c->add_option("--degrees", o.degrees, "Use the monomial ACI for these degrees")->delimiter(',');
    c->add_option("--h", o.h, "Extra degree for --degrees");
    c->add_option("--expect", o.expect, "Expected Betti table JSON");
    c->add_option("--out", o.out, "Output file (relative paths resolve against $ACIKIT_OUT_DIR)");
  }

  {
    auto* c = leaf(&app, "verify", "Run the verification checks", verify);
    c->add_option("--scope", o.scope, "monomial (alias section3) | liaison | koszul | classification | pfaffian | all");
    c->add_option("--max-degree", o.max_degree, "Largest CI degree for the monomial checks");
    c->add_option("--max-a", o.max_a, "Largest a for the classification checks");
  }

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    r.text = app.help();
    for (auto* sub = &app; sub;) {
      auto subs = sub->get_subcommands();
      if (subs.empty()) break;
      sub = subs.front();
      r.text = sub->help();
    }
    return r;
  } catch (const CLI::ParseError& e) {
    auto r = failure("usage", e.what());
    r.json_output = as_json;
    return r;
  }

  CommandResult result;
  try {
    result = action(o);
  } catch (const Error& e) {
    result = failure(std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    result = failure("internal", e.what());
  }
  result.json_output = as_json;
  return result;
}

int emit(const CommandResult& result) {
  if (result.json_output) {
    std::cout << result.envelope().dump() << "\n";
  } else if (result.ok || !result.text.empty()) {
    std::cout << result.text << "\n";
  }
  if (!result.ok) std::cerr << "error[" << result.error_code << "]: " << result.message << "\n";
  return result.exit_code();
}

}  // namespace aci::cli
