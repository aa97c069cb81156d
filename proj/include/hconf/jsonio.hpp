#pragma once

#include <json.hpp>

#include "hconf/enrichment.hpp"

namespace hconf {

// Structure <-> nested array of integers; Enrichment <-> {"n", "structures"}.
nlohmann::json structure_to_json(const Structure& s);
Structure structure_from_json(const nlohmann::json& j);

// Canonical structure from a nested-set literal over {1..n}.
Structure mk_structure(const nlohmann::json& literal, int n);

nlohmann::json enrichment_to_json(const Enrichment& e);
Enrichment enrichment_from_json(const nlohmann::json& j);

}  // namespace hconf
