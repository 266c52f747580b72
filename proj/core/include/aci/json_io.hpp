#pragma once

#include <nlohmann/json.hpp>

#include "aci/classification.hpp"
#include "aci/hilbert.hpp"
#include "aci/liaison.hpp"
#include "aci/monomial_ideal.hpp"
#include "aci/polynomial.hpp"

namespace aci {

using Json = nlohmann::json;

// Machine-size integers serialize as numbers, anything larger as a decimal string.
Json to_json(const Integer& value);
Integer integer_from_json(const Json& j);

Json to_json(const std::vector<Integer>& values);
Json to_json(const HilbertFunction& h);
HilbertFunction hilbert_from_json(const Json& j);

Json to_json(const DegreeTuple& d);

// {"c":3,"levels":[[0],[2,2,2,3],[3,4,4,4,5],[5,6]]}
Json to_json(const BettiTable& table);
BettiTable betti_table_from_json(const Json& j);

// {"c":3,"gens":[[2,0,0],[0,2,0],[0,0,3],[1,0,1]]}
Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

// {"variables":[...],"terms":[{"coeff":1,"exponents":[...]},...]}, terms in
// descending lexicographic order.
Json to_json(const Polynomial& p);

Json to_json(const ClassifiedTable& table);
Json to_json(const TablePoset& poset);
Json to_json(const MappingCone& cone);

}  // namespace aci
