#include "aci/json_io.hpp"

#include "aci/error.hpp"

namespace aci {

namespace {

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::invalid_input, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::invalid_input, std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::invalid_input, "malformed integer string");
    return out;
  }
  throw Error(ErrorCode::invalid_input, "expected an integer");
}

Json to_json(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Json to_json(const HilbertFunction& h) { return to_json(h.values()); }

HilbertFunction hilbert_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::invalid_input, "Hilbert function must be a JSON array");
  std::vector<Integer> values;
  for (const auto& v : j) values.push_back(integer_from_json(v));
  return HilbertFunction(std::move(values));
}

Json to_json(const DegreeTuple& d) { return Json(std::vector<int>(d.degrees().begin(), d.degrees().end())); }

Json to_json(const BettiTable& table) { return Json{{"c", table.variables()}, {"levels", table.levels()}}; }

BettiTable betti_table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("c") || !j.contains("levels"))
    throw Error(ErrorCode::invalid_input, "Betti table needs \"c\" and \"levels\"");
  Levels levels;
  for (const auto& level : j.at("levels")) levels.push_back(int_list(level, "level"));
  return BettiTable(j.at("c").get<int>(), std::move(levels));
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(std::vector<int>(g.exponents().begin(), g.exponents().end()));
  return Json{{"c", ideal.variables()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("c") || !j.contains("gens"))
    throw Error(ErrorCode::invalid_input, "ideal needs \"c\" and \"gens\"");
  const int c = j.at("c").get<int>();
  if (c < 1) throw Error(ErrorCode::invalid_input, "ideal needs c >= 1");
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) {
    auto exps = int_list(g, "generator");
    if (static_cast<int>(exps.size()) != c) throw Error(ErrorCode::invalid_input, "generator length differs from c");
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::minimalize(std::move(gens), c);
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(Json{{"coeff", to_json(it->second)}, {"exponents", it->first}});
  return Json{{"variables", *p.variables()}, {"terms", terms}};
}

Json to_json(const ClassifiedTable& table) {
  return Json{{"c", table.table.variables()},
              {"levels", table.table.levels()},
              {"t", table.t()},
              {"parity", std::string(to_string(table.family.parity))},
              {"d_star", d_star(table)}};
}

Json to_json(const TablePoset& poset) {
  Json tables = Json::array();
  for (const auto& t : poset.tables) tables.push_back(to_json(t));
  Json edges = Json::array();
  for (const auto& e : poset.edges)
    edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"kind", std::string(to_string(e.kind))}, {"twists", e.twists}});
  return Json{{"a", poset.a}, {"h", poset.h}, {"tables", tables}, {"edges", edges}};
}

Json to_json(const MappingCone& cone) {
  Json candidates = Json::array();
  for (const auto& c : cone.candidates)
    candidates.push_back(Json{{"level", c.level}, {"twist", c.twist}, {"multiplicity", c.multiplicity}});
  return Json{{"z", to_json(cone.link.z)},
              {"theta", cone.link.theta},
              {"e", cone.link.socle},
              {"levels", cone.levels},
              {"minimal", cone.minimal()},
              {"candidates", candidates},
              {"cancelled_levels", cone.cancel_all()},
              {"hilbert", to_json(cone.hilbert)}};
}

}  // namespace aci
