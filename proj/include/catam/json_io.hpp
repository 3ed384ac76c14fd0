#pragma once

#include <json.hpp>

#include "catam/atam.hpp"
#include "catam/ca.hpp"

namespace catam {

using json = nlohmann::json;

json tas_to_json(const TileSystem& ts);
TileSystem tas_from_json(const json& j);

// Table, builtin and compiled_from_tas rules serialize; rescaled rules are
// in-memory only.
json ca_to_json(const CADefinition& ca);
CADefinition ca_from_json(const json& j);

json config_to_json(const CADefinition& ca, const Configuration& c);
Configuration config_from_json(const CADefinition& ca, const json& j);

json assembly_to_json(const TileSystem& ts, const Assembly& a);
Assembly assembly_from_json(const TileSystem& ts, const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace catam
