#pragma once

#include <nlohmann/json.hpp>

#include "ecsf/bases.hpp"
#include "ecsf/compositions.hpp"
#include "ecsf/graphs.hpp"
#include "ecsf/symfunc.hpp"

namespace ecsf {

using json = nlohmann::ordered_json;

json to_json(const Composition& a);
json to_json(const Partition& a);
Composition composition_from_json(const json& j);

// {"basis":"p","terms":[{"coeff":"-1","partition":[4]},...]} in canonical order
json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const json& j);

// {"weights":[...],"edges":[[i,j],...]}; repeated pairs for multiedges,
// [i,i] for loops
json to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const json& j);

json to_json(const BasisMatrix& m);

json load_json_file(const std::string& path);

} // namespace ecsf
