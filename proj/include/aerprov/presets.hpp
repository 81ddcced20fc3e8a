#pragma once
// Bundled scenario presets. The same documents ship as files under
// presets/; AERPROV_PRESET_DIR points the CLI at an alternative set.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aerprov {

inline constexpr std::string_view kPresetTreeNode = R"preset(
{
  "name": "tree-node",
  "profiles": {
    "tree-node": {
      "sleep_power_mw": 0.025,
      "events": [
        {"label": "lorawan-sf12", "power_mw": 111.15, "duration_s": 1.81, "occurrences_per_day": 96},
        {"label": "sensor", "power_mw": 65.7, "duration_s": 0.19, "occurrences_per_day": 96}
      ]
    }
  },
  "batteries": {
    "alkaline-21kj": {"chemistry": "alkaline", "capacity_j": 21000},
    "lco-0.36wh": {"chemistry": "lco", "capacity_wh": 0.36},
    "lco-1.80wh": {"chemistry": "lco", "capacity_wh": 1.8},
    "lco-2.88wh": {"chemistry": "lco", "capacity_wh": 2.88},
    "lto-2.88wh": {"chemistry": "lto", "capacity_wh": 2.88}
  }
}
)preset";

inline constexpr std::string_view kPresetGasNode = R"preset(
{
  "name": "gas-node",
  "profiles": {
    "gas-node": {
      "sleep_power_mw": 0.025,
      "events": [
        {"label": "lorawan-sf12", "power_mw": 111.15, "duration_s": 1.81, "occurrences_per_day": 96},
        {"label": "sensor", "power_mw": 23.4, "duration_s": 92.0, "occurrences_per_day": 96}
      ]
    }
  },
  "batteries": {
    "alkaline-208kj": {"chemistry": "alkaline", "capacity_j": 208000},
    "lco-1.80wh": {"chemistry": "lco", "capacity_wh": 1.8},
    "lto-2.88wh": {"chemistry": "lto", "capacity_wh": 2.88},
    "lto-2.31wh": {"chemistry": "lto", "capacity_wh": 2.311}
  }
}
)preset";

inline constexpr std::string_view kPresetTreeFleet = R"preset(
{
  "name": "tree-fleet",
  "profiles": {
    "tree-node": {
      "sleep_power_mw": 0.025,
      "events": [
        {"label": "lorawan-sf12", "power_mw": 111.15, "duration_s": 1.81, "occurrences_per_day": 96},
        {"label": "sensor", "power_mw": 65.7, "duration_s": 0.19, "occurrences_per_day": 96}
      ]
    }
  },
  "batteries": {
    "lco-1.80wh": {"chemistry": "lco", "capacity_wh": 1.8},
    "lco-2.88wh": {"chemistry": "lco", "capacity_wh": 2.88}
  },
  "fleet": [
    {"id": "tree-1", "position_m": [25.0, 40.0], "profile": "tree-node", "battery": "lco-1.80wh", "initial_soc": 1.0, "report_mode": "every-uplink"}
  ],
  "uav": {
    "base_position_m": [0.0, 0.0],
    "sortie_energy_budget_j": 2000000.0,
    "transit_speed_m_per_s": 10.0,
    "transit_power_w": 150.0,
    "hover_power_w": 200.0,
    "max_charge_time_s": 300.0
  },
  "alignment": {"regime": "rtk", "fine_residual_sigma_mm": 0.0},
  "policy": {"kind": "fixed-calendar", "interventions_per_year": 12}
}
)preset";

inline constexpr std::string_view kPresetGasFleet = R"preset(
{
  "name": "gas-fleet",
  "profiles": {
    "gas-node": {
      "sleep_power_mw": 0.025,
      "events": [
        {"label": "lorawan-sf12", "power_mw": 111.15, "duration_s": 1.81, "occurrences_per_day": 96},
        {"label": "sensor", "power_mw": 23.4, "duration_s": 92.0, "occurrences_per_day": 96}
      ]
    }
  },
  "batteries": {
    "lto-2.88wh": {"chemistry": "lto", "capacity_wh": 2.88}
  },
  "fleet": [
    {"id": "gas-1", "position_m": [60.0, -45.0], "profile": "gas-node", "battery": "lto-2.88wh", "initial_soc": 1.0, "report_mode": "every-uplink"}
  ],
  "uav": {
    "base_position_m": [0.0, 0.0],
    "sortie_energy_budget_j": 2000000.0,
    "transit_speed_m_per_s": 10.0,
    "transit_power_w": 150.0,
    "hover_power_w": 200.0,
    "max_charge_time_s": 300.0
  },
  "alignment": {"regime": "rtk", "fine_residual_sigma_mm": 0.0},
  "policy": {"kind": "fixed-calendar", "interventions_per_year": 12}
}
)preset";

inline constexpr std::string_view kPresetDemoFleet = R"preset(
{
  "name": "demo-fleet",
  "profiles": {
    "tree-node": {
      "sleep_power_mw": 0.025,
      "events": [
        {"label": "lorawan-sf12", "power_mw": 111.15, "duration_s": 1.81, "occurrences_per_day": 96},
        {"label": "sensor", "power_mw": 65.7, "duration_s": 0.19, "occurrences_per_day": 96}
      ]
    },
    "gas-node": {
      "sleep_power_mw": 0.025,
      "events": [
        {"label": "lorawan-sf12", "power_mw": 111.15, "duration_s": 1.81, "occurrences_per_day": 96},
        {"label": "sensor", "power_mw": 23.4, "duration_s": 92.0, "occurrences_per_day": 96}
      ]
    }
  },
  "batteries": {
    "lco-1.80wh": {"chemistry": "lco", "capacity_wh": 1.8},
    "lto-2.88wh": {"chemistry": "lto", "capacity_wh": 2.88}
  },
  "fleet": [
    {"id": "tree-01", "position_m": [120.0, 80.0], "profile": "tree-node", "battery": "lco-1.80wh", "initial_soc": 0.9, "report_mode": "every-uplink"},
    {"id": "tree-02", "position_m": [-200.0, 150.0], "profile": "tree-node", "battery": "lco-1.80wh", "initial_soc": 0.75, "report_mode": {"threshold_soc": 0.5}},
    {"id": "tree-03", "position_m": [310.0, -40.0], "profile": "tree-node", "battery": "lco-1.80wh", "initial_soc": 1.0, "report_mode": "every-uplink"},
    {"id": "gas-01", "position_m": [-90.0, -220.0], "profile": "gas-node", "battery": "lto-2.88wh", "initial_soc": 0.8, "report_mode": "every-uplink"},
    {"id": "gas-02", "position_m": [45.0, 260.0], "profile": "gas-node", "battery": "lto-2.88wh", "initial_soc": 1.0, "report_mode": {"threshold_soc": 0.4}}
  ],
  "uav": {
    "base_position_m": [0.0, 0.0],
    "sortie_energy_budget_j": 1500000.0,
    "transit_speed_m_per_s": 10.0,
    "transit_power_w": 150.0,
    "hover_power_w": 200.0,
    "max_charge_time_s": 300.0
  },
  "alignment": {"regime": "forested", "fine_residual_sigma_mm": 4.0},
  "policy": {"kind": "soc-triggered", "interventions_per_year": 26, "soc_trigger": 0.35, "prediction_window_days": 21}
}
)preset";

inline std::vector<std::string> preset_names() {
  return {"tree-node", "gas-node", "tree-fleet", "gas-fleet", "demo-fleet"};
}

inline std::optional<std::string_view> builtin_preset_text(std::string_view name) {
  if (name == "tree-node") return kPresetTreeNode;
  if (name == "gas-node") return kPresetGasNode;
  if (name == "tree-fleet") return kPresetTreeFleet;
  if (name == "gas-fleet") return kPresetGasFleet;
  if (name == "demo-fleet") return kPresetDemoFleet;
  return std::nullopt;
}

}  // namespace aerprov
