#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "opinet/engine.hpp"

namespace opinet {

/// Missing, mistyped or out-of-range configuration field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a flat JSON object holding every ModelParams and SimulationConfig
/// field. Only recluster_interval, metrics_every, connection_mode and
/// max_single_cluster_fraction may be omitted; unknown keys are rejected.
SimulationConfig parse_config(const std::string& json_text);
SimulationConfig load_config(const std::filesystem::path& path);

/// The same flat object, suitable for parse_config.
nlohmann::ordered_json config_to_json(const SimulationConfig& cfg);

}  // namespace opinet
