#pragma once

#include <string>

#include <json.hpp>

#include "hypersym/hypergroup.hpp"
#include "hypersym/monoid.hpp"
#include "hypersym/symmetrize.hpp"

namespace hypersym {

// Monoid files:      {"name"?: string, "order": n, "table": [[int x n] x n]}
// Hypergroup files:  {"elements": [labels], "neutral": int, "table": [[[int]]]}
// Symmetrizations add "injection": [int].

nlohmann::json monoid_to_json(const FiniteCommutativeMonoid& m);
FiniteCommutativeMonoid monoid_from_json(const nlohmann::json& j);

nlohmann::json hypergroup_to_json(const FiniteHypergroup& h);
FiniteHypergroup hypergroup_from_json(const nlohmann::json& j);

nlohmann::json symmetrization_to_json(const SymmetrizationResult& s);

/// Parses a JSON file; throws ParseError on IO or syntax problems.
nlohmann::json read_json_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace hypersym
