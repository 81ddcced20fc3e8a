#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aerprov/presets.hpp"
#include "aerprov/scenario.hpp"
#include "aerprov/sim.hpp"
#include "aerprov/version.hpp"

namespace aerprov {

/// Bundled preset by name, overridable through AERPROV_PRESET_DIR.
inline ScenarioConfig load_preset(const std::string& name) {
  if (const char* dir = std::getenv("AERPROV_PRESET_DIR")) {
    const auto path = std::filesystem::path(dir) / (name + ".json");
    if (std::filesystem::exists(path)) return load_scenario_file(path);
  }
  if (auto text = builtin_preset_text(name)) {
    return load_scenario_text(std::string(*text), name);
  }
  std::string known;
  for (const auto& preset : preset_names()) {
    if (!known.empty()) known += ", ";
    known += preset;
  }
  throw ConfigError("unknown preset '" + name + "' (available: " + known + ")");
}

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

inline std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

/// Provenance record written next to every output directory: rerunning the
/// same command/config/seed reproduces the artifacts byte for byte.
struct RunManifest {
  std::string command;
  std::string config_hash;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> artifacts;
  std::string tool_version = std::string(kToolName) + " " + kToolVersion;
};

inline json manifest_json(const RunManifest& manifest) {
  json out;
  out["command"] = manifest.command;
  out["config_hash"] = manifest.config_hash;
  if (manifest.seed) {
    out["seed"] = *manifest.seed;
  } else {
    out["seed"] = nullptr;
  }
  out["artifacts"] = manifest.artifacts;
  out["tool_version"] = manifest.tool_version;
  return out;
}

inline std::string config_hash(const ScenarioConfig& config) {
  return "fnv1a64:" + hex64(fnv1a64(scenario_to_json(config).dump()));
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline json summary_json(const SimTrace& trace) {
  json nodes = json::object();
  for (const auto& [id, summary] : trace.summary) {
    json node;
    if (summary.depletion_day) {
      node["depletion_day"] = *summary.depletion_day;
    } else {
      node["depletion_day"] = nullptr;
    }
    node["min_soc"] = summary.min_soc;
    node["final_soc"] = summary.final_soc;
    node["interventions"] = summary.interventions;
    nodes[id] = std::move(node);
  }
  json out;
  out["nodes"] = std::move(nodes);
  out["uav"] = {{"total_spent_j", trace.uav_total_spent_j},
                {"transit_j", trace.uav_transit_j},
                {"sorties", trace.sorties}};
  out["unreachable"] = trace.unreachable;
  return out;
}

}  // namespace aerprov
