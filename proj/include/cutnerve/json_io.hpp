#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cutnerve/complex.hpp"
#include "cutnerve/constructions.hpp"
#include "cutnerve/graph.hpp"
#include "cutnerve/homology.hpp"
#include "cutnerve/morse.hpp"

namespace cutnerve {

using Json = nlohmann::ordered_json;

// Faces are written as lists of labels. Parse errors throw Error(Parse).

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

/// Label-canonical form: used labels sorted, facets as sorted label lists in
/// sorted order. Two complexes are equals_labeled iff their canonical forms
/// are equal.
Json canonical_json(const SimplicialComplex& c);

/// FNV-1a 64 of canonical_json(c).dump(), as 16 hex digits.
std::string digest(const SimplicialComplex& c);
std::string fnv1a_hex(const std::string& bytes);

Json to_json(const HomologyProfile& p);

Json to_json(const Cover& cover);

Json to_json(const CollapseWitness& w, const SimplicialComplex& start);
/// Steps of a witness written by to_json, resolved against `c`.
std::vector<FreePair> collapse_steps_from_json(const Json& j, const SimplicialComplex& c);

Json read_json_file(const std::string& path);

}  // namespace cutnerve
