#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nhnet {

inline constexpr int kConfigSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { Csv, Json, Svg };

/// A validated batch job. `parameters` holds every scenario parameter, with defaults
/// filled in; `defaulted` names the ones that were not present in the user's config.
struct ScenarioConfig {
  std::string scenario;  // defect | lee | ptbic | reduce | sweep
  nlohmann::json parameters;
  std::set<std::string> defaulted;
  std::filesystem::path output;
  std::set<OutputFormat> formats{OutputFormat::Csv, OutputFormat::Json, OutputFormat::Svg};
};

const std::vector<std::string>& scenario_names();

/// Default parameter object for a scenario ("reduce" has a required "network" that no default fills).
nlohmann::json default_parameters(const std::string& scenario);

/// Validates a config document:
///   { "schema_version": 1, "scenario": "<name>"?, "parameters": { ... } }
/// Unknown keys at either level are rejected. Throws Error(InvalidConfig).
ScenarioConfig parse_config(const std::string& scenario, const nlohmann::json& doc,
                            const std::filesystem::path& output);

/// Parses "csv,svg,json". Throws Error(InvalidConfig).
std::set<OutputFormat> parse_formats(const std::string& list);

struct RunResult {
  std::vector<std::filesystem::path> files;  // in write order, manifest last
};

/// Computes the scenario and writes its artifacts plus manifest.txt into config.output.
/// Library errors propagate as nhnet::Error.
RunResult run(const ScenarioConfig& config);

/// Full command-line entry point. Returns 0 on success, 2 for invalid configuration or
/// usage, 3 for numerical failures.
int cli_main(int argc, char** argv);

}  // namespace nhnet
