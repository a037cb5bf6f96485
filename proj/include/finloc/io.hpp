#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "finloc/lattice.hpp"
#include "finloc/polarity.hpp"

namespace finloc {

/// Parses {"elements": [...], "leq": [[a, b], ...]}; the order is the
/// reflexive-transitive closure of the listed pairs.
FiniteLattice lattice_from_json(const nlohmann::json& j);

/// Parses {"points": [...], "opens": [[...], ...]} after checking that the
/// opens form a topology. Elements are named after their point sets.
FiniteLattice topology_from_json(const nlohmann::json& j);

/// Dispatches on the keys present: "elements" or "points".
FiniteLattice frame_input_from_json(const nlohmann::json& j);

/// Parses {"objects": [...], "attributes": [...], "incidence": [[i, j], ...]}.
Polarity polarity_from_json(const nlohmann::json& j);

/// {"elements": names, "leq": covering pairs by name}.
nlohmann::json lattice_to_json(const FiniteLattice& l);

/// Reads and parses a JSON file; InvalidInput on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);

/// Hasse diagram in DOT, one rank per height. `classes` maps an element to
/// a fill colour.
std::string hasse_dot(const FiniteLattice& l, const std::string& graph_name,
                      const std::map<int, std::string>& classes = {});

}  // namespace finloc
