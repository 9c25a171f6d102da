#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "zigzagcat/braid_action.hpp"
#include "zigzagcat/burau.hpp"
#include "zigzagcat/stability_a2.hpp"

namespace zzc {

using json = nlohmann::ordered_json;

json to_json(const CoxeterGraph& g);
/// {"type", "n", "edges", "orientation"}; orientation defaults to the order given in edges.
CoxeterGraph graph_from_json(const json& j);
/// Shorthand such as "a3", or a path to a graph JSON file.
CoxeterGraph load_graph(const std::string& spec);

json to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const json& j);

json to_json(const ProjComplex& c);
ProjComplex complex_from_json(const AlgebraPtr& alg, const json& j);

json to_json(const LaurentMatrix& m);
json to_json(const LaurentVector& v);
json to_json(const HomDims& d);
json to_json(const a2::Automaton& a);

/// FNV-1a over the serialized sorted generators and differential.
std::uint64_t complex_digest(const ProjComplex& c);
std::string hex_digest(std::uint64_t h);

}  // namespace zzc
