#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "aerprov/battery.hpp"
#include "aerprov/consumption.hpp"
#include "aerprov/sim.hpp"
#include "aerprov/wpt.hpp"

namespace aerprov {

using json = nlohmann::json;

/// Schema violation; the message carries the offending key path.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

/// Strict object reader: every key must be consumed, everything else is an
/// error with its full path.
class StrictObject {
 public:
  StrictObject(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  bool has(const char* key) const { return j_.contains(key); }

  const json* get(const char* key) {
    used_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const json& at(const char* key) {
    const json* v = get(key);
    if (!v) throw ConfigError(path_ + "." + key + ": missing required key");
    return *v;
  }

  double number(const char* key) { return as_number(at(key), key); }

  double number_or(const char* key, double fallback) {
    const json* v = get(key);
    return v ? as_number(*v, key) : fallback;
  }

  int integer_or(const char* key, int fallback) {
    const json* v = get(key);
    if (!v) return fallback;
    if (!v->is_number_integer()) {
      throw ConfigError(path_ + "." + key + ": expected an integer");
    }
    return v->get<int>();
  }

  bool bool_or(const char* key, bool fallback) {
    const json* v = get(key);
    if (!v) return fallback;
    if (!v->is_boolean()) {
      throw ConfigError(path_ + "." + key + ": expected a boolean");
    }
    return v->get<bool>();
  }

  std::string string(const char* key) {
    const json& v = at(key);
    if (!v.is_string()) {
      throw ConfigError(path_ + "." + key + ": expected a string");
    }
    return v.get<std::string>();
  }

  std::string string_or(const char* key, const std::string& fallback) {
    const json* v = get(key);
    if (!v) return fallback;
    if (!v->is_string()) {
      throw ConfigError(path_ + "." + key + ": expected a string");
    }
    return v->get<std::string>();
  }

  void done() const {
    for (const auto& item : j_.items()) {
      if (used_.count(item.key()) == 0) {
        throw ConfigError(path_ + "." + item.key() + ": unknown key");
      }
    }
  }

  const std::string& path() const { return path_; }

 private:
  double as_number(const json& v, const char* key) const {
    if (!v.is_number()) {
      throw ConfigError(path_ + "." + key + ": expected a number");
    }
    return v.get<double>();
  }

  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

inline std::pair<double, double> position_pair(const json& v,
                                               const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number()) {
    throw ConfigError(path + ": expected [x, y] in meters");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace detail

struct FleetEntry {
  std::string id;
  double x_m = 0.0;
  double y_m = 0.0;
  std::string profile;
  std::string battery;
  double initial_soc = 1.0;
  ReportMode report_mode = ReportMode::every_uplink;
  double threshold_soc = 0.0;
};

struct SweepRanges {
  std::vector<double> capacities_wh;
  std::vector<double> charge_rates_per_h;
  std::vector<double> charge_times_s;
  std::vector<int> interventions_per_year;

  bool empty() const {
    return capacities_wh.empty() && charge_rates_per_h.empty() &&
           charge_times_s.empty() && interventions_per_year.empty();
  }
};

/// Everything a run needs, loadable from one strict JSON document. Unit
/// conventions are spelled out in the key names.
struct ScenarioConfig {
  std::string name;
  std::map<std::string, BatterySpec> batteries;
  std::map<std::string, NodeProfile> profiles;
  IptCoilModel ipt;
  RfLinkModel rf = default_rf_model();
  FeasibilityLimits limits;
  AlignmentModel alignment = alignment_preset(PositioningRegime::rtk, 0.0);
  UavSpec uav;
  DispatchPolicy policy;
  bool charge_before_consumption = false;
  std::vector<FleetEntry> fleet;
  SweepRanges sweeps;
};

namespace detail {

inline BatterySpec parse_battery(const json& j, const std::string& path,
                                 const std::string& name) {
  StrictObject obj(j, path);
  const std::string chemistry = obj.string_or("chemistry", "custom");
  const json* cap_j = obj.get("capacity_j");
  const json* cap_wh = obj.get("capacity_wh");
  if ((cap_j == nullptr) == (cap_wh == nullptr)) {
    throw ConfigError(path + ": exactly one of capacity_j/capacity_wh required");
  }
  const double capacity =
      cap_j ? cap_j->get<double>() : wh_to_joules(cap_wh->get<double>());

  BatterySpec spec;
  if (auto defaults = chemistry_defaults(chemistry, capacity)) {
    spec = *defaults;
  } else {
    spec = BatterySpec{chemistry, 3.6, capacity, 1.0, 0.0, std::nullopt};
  }
  spec.nominal_voltage_v = obj.number_or("nominal_voltage_v", spec.nominal_voltage_v);
  spec.charge_rate_per_h = obj.number_or("charge_rate_per_h", spec.charge_rate_per_h);
  spec.self_discharge_per_year =
      obj.number_or("self_discharge_per_year", spec.self_discharge_per_year);
  if (const json* cycles = obj.get("cycle_life")) {
    spec.cycle_life = cycles->get<double>();
  }
  obj.done();
  try {
    spec.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(path + ": " + err.what());
  }
  (void)name;
  return spec;
}

inline NodeProfile parse_profile(const json& j, const std::string& path,
                                 const std::string& name) {
  StrictObject obj(j, path);
  NodeProfile profile;
  profile.name = name;
  profile.sleep_power_mw = obj.number_or("sleep_power_mw", 0.0);
  if (const json* events = obj.get("events")) {
    if (!events->is_array()) throw ConfigError(path + ".events: expected an array");
    int index = 0;
    for (const auto& entry : *events) {
      const std::string event_path =
          path + ".events[" + std::to_string(index++) + "]";
      StrictObject event_obj(entry, event_path);
      ActivityEvent event;
      event.label = event_obj.string_or("label", "event");
      event.power_mw = event_obj.number("power_mw");
      event.duration_s = event_obj.number("duration_s");
      event.occurrences_per_day = event_obj.number("occurrences_per_day");
      event_obj.done();
      profile.events.push_back(std::move(event));
    }
  }
  if (const json* losses = obj.get("losses_j_per_day")) {
    StrictObject loss_obj(*losses, path + ".losses_j_per_day");
    profile.losses.e_sd_j_per_day = loss_obj.number_or("self_discharge", 0.0);
    profile.losses.e_conv_j_per_day = loss_obj.number_or("conversion", 0.0);
    profile.losses.e_leak_j_per_day = loss_obj.number_or("leakage", 0.0);
    loss_obj.done();
  }
  obj.done();
  try {
    daily_energy_j(profile);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(path + ": " + err.what());
  }
  return profile;
}

inline IptCoilModel parse_ipt(const json& j, const std::string& path) {
  StrictObject obj(j, path);
  const std::string shape = obj.string_or("shape", "quadratic");
  IptCoilModel model;
  const double peak = obj.number_or("peak_efficiency", 0.85);
  if (shape == "quadratic" || shape == "linear") {
    const double ref_offset = obj.number_or("reference_offset_mm", 12.0);
    const double ref_eff = obj.number_or("reference_efficiency", 0.70);
    const json* falloff2 = obj.get("falloff_per_mm2");
    const json* falloff1 = obj.get("falloff_per_mm");
    if (falloff2 && falloff1) {
      throw ConfigError(path + ": give only one falloff key");
    }
    model.peak_efficiency = peak;
    if (shape == "quadratic") {
      if (falloff1) {
        throw ConfigError(path + ".falloff_per_mm: quadratic shape takes falloff_per_mm2");
      }
      model.shape = IptFalloffShape::quadratic;
      model.falloff = falloff2 ? falloff2->get<double>()
                               : (peak - ref_eff) / (ref_offset * ref_offset);
    } else {
      if (falloff2) {
        throw ConfigError(path + ".falloff_per_mm2: linear shape takes falloff_per_mm");
      }
      model.shape = IptFalloffShape::linear;
      model.falloff =
          falloff1 ? falloff1->get<double>() : (peak - ref_eff) / ref_offset;
    }
    model.cutoff_offset_mm =
        model.falloff > 0.0
            ? (shape == "quadratic" ? std::sqrt(peak / model.falloff)
                                    : peak / model.falloff)
            : 1e9;
  } else if (shape == "table") {
    const json& points = obj.at("table_points");
    if (!points.is_array() || points.size() < 2) {
      throw ConfigError(path + ".table_points: expected >= 2 [offset_mm, efficiency] pairs");
    }
    model.shape = IptFalloffShape::table;
    model.peak_efficiency = peak;
    for (const auto& p : points) {
      if (!p.is_array() || p.size() != 2) {
        throw ConfigError(path + ".table_points: expected [offset_mm, efficiency] pairs");
      }
      model.table.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    model.cutoff_offset_mm = model.table.back().first;
  } else {
    throw ConfigError(path + ".shape: unknown shape '" + shape + "'");
  }
  model.cutoff_offset_mm = obj.number_or("cutoff_offset_mm", model.cutoff_offset_mm);
  model.coil_width_mm = obj.number_or("coil_width_mm", model.coil_width_mm);
  model.coil_height_mm = obj.number_or("coil_height_mm", model.coil_height_mm);
  obj.done();
  try {
    model.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(path + ": " + err.what());
  }
  return model;
}

inline RfLinkModel parse_rf(const json& j, const std::string& path) {
  StrictObject obj(j, path);
  RfAnchor anchor;
  if (const json* a = obj.get("anchor")) {
    StrictObject anchor_obj(*a, path + ".anchor");
    anchor.distance_m = anchor_obj.number_or("distance_m", anchor.distance_m);
    anchor.tx_dbm = anchor_obj.number_or("tx_dbm", anchor.tx_dbm);
    anchor.rx_dbm = anchor_obj.number_or("rx_dbm", anchor.rx_dbm);
    anchor_obj.done();
  }
  if (anchor.distance_m <= 0.0) {
    throw ConfigError(path + ".anchor.distance_m: must be > 0");
  }
  const double frequency = obj.number_or("frequency_hz", 868e6);
  if (frequency <= 0.0) throw ConfigError(path + ".frequency_hz: must be > 0");
  RfLinkModel model = calibrated_rf_model(
      frequency, obj.number_or("combined_gain_db", 0.0),
      obj.number_or("path_loss_exponent", 2.0), anchor);
  obj.done();
  return model;
}

inline FeasibilityLimits parse_limits(const json& j, const std::string& path) {
  StrictObject obj(j, path);
  FeasibilityLimits limits;
  limits.ipt_power_ceiling_w = obj.number_or("ipt_power_ceiling_w", limits.ipt_power_ceiling_w);
  limits.cpt_power_ceiling_w = obj.number_or("cpt_power_ceiling_w", limits.cpt_power_ceiling_w);
  limits.rf_receivable_power_w =
      obj.number_or("rf_receivable_power_w", limits.rf_receivable_power_w);
  limits.coupled_efficiency = obj.number_or("coupled_efficiency", limits.coupled_efficiency);
  obj.done();
  return limits;
}

inline AlignmentModel parse_alignment(const json& j, const std::string& path) {
  StrictObject obj(j, path);
  const std::string regime_name = obj.string_or("regime", "rtk");
  PositioningRegime regime;
  if (regime_name == "open") {
    regime = PositioningRegime::open;
  } else if (regime_name == "forested") {
    regime = PositioningRegime::forested;
  } else if (regime_name == "rtk") {
    regime = PositioningRegime::rtk;
  } else {
    throw ConfigError(path + ".regime: unknown regime '" + regime_name + "'");
  }
  AlignmentModel model = alignment_preset(regime, 0.0);
  model.coarse_error_sigma_m =
      obj.number_or("coarse_error_sigma_m", model.coarse_error_sigma_m);
  model.fine_residual_sigma_mm = obj.number_or("fine_residual_sigma_mm", 0.0);
  obj.done();
  try {
    model.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError(path + ": " + err.what());
  }
  return model;
}

inline std::vector<double> number_list(const json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError(path + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& item : v) {
    if (!item.is_number()) throw ConfigError(path + ": expected numbers");
    out.push_back(item.get<double>());
  }
  return out;
}

inline std::vector<int> integer_list(const json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError(path + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& item : v) {
    if (!item.is_number_integer()) throw ConfigError(path + ": expected integers");
    out.push_back(item.get<int>());
  }
  return out;
}

}  // namespace detail

inline ScenarioConfig parse_scenario(const json& root,
                                     const std::string& fallback_name = "scenario") {
  detail::StrictObject obj(root, "config");
  ScenarioConfig config;
  config.name = obj.string_or("name", fallback_name);

  if (const json* batteries = obj.get("batteries")) {
    if (!batteries->is_object()) throw ConfigError("config.batteries: expected an object");
    for (const auto& item : batteries->items()) {
      config.batteries[item.key()] = detail::parse_battery(
          item.value(), "config.batteries." + item.key(), item.key());
    }
  }
  if (const json* profiles = obj.get("profiles")) {
    if (!profiles->is_object()) throw ConfigError("config.profiles: expected an object");
    for (const auto& item : profiles->items()) {
      config.profiles[item.key()] = detail::parse_profile(
          item.value(), "config.profiles." + item.key(), item.key());
    }
  }
  if (const json* wpt = obj.get("wpt")) {
    detail::StrictObject wpt_obj(*wpt, "config.wpt");
    if (const json* ipt = wpt_obj.get("ipt")) {
      config.ipt = detail::parse_ipt(*ipt, "config.wpt.ipt");
    }
    if (const json* rf = wpt_obj.get("rf")) {
      config.rf = detail::parse_rf(*rf, "config.wpt.rf");
    }
    if (const json* limits = wpt_obj.get("limits")) {
      config.limits = detail::parse_limits(*limits, "config.wpt.limits");
    }
    wpt_obj.done();
  }
  if (const json* alignment = obj.get("alignment")) {
    config.alignment = detail::parse_alignment(*alignment, "config.alignment");
  }
  if (const json* uav = obj.get("uav")) {
    detail::StrictObject uav_obj(*uav, "config.uav");
    if (const json* base = uav_obj.get("base_position_m")) {
      std::tie(config.uav.base_x_m, config.uav.base_y_m) =
          detail::position_pair(*base, "config.uav.base_position_m");
    }
    config.uav.sortie_energy_budget_j =
        uav_obj.number_or("sortie_energy_budget_j", config.uav.sortie_energy_budget_j);
    config.uav.transit_speed_m_per_s =
        uav_obj.number_or("transit_speed_m_per_s", config.uav.transit_speed_m_per_s);
    config.uav.transit_power_w =
        uav_obj.number_or("transit_power_w", config.uav.transit_power_w);
    config.uav.hover_power_w =
        uav_obj.number_or("hover_power_w", config.uav.hover_power_w);
    config.uav.max_charge_time_s =
        uav_obj.number_or("max_charge_time_s", config.uav.max_charge_time_s);
    uav_obj.done();
  }
  if (const json* policy = obj.get("policy")) {
    detail::StrictObject policy_obj(*policy, "config.policy");
    const std::string kind = policy_obj.string_or("kind", "fixed-calendar");
    if (kind == "fixed-calendar") {
      config.policy.kind = PolicyKind::fixed_calendar;
    } else if (kind == "soc-triggered") {
      config.policy.kind = PolicyKind::soc_triggered;
    } else {
      throw ConfigError("config.policy.kind: unknown kind '" + kind + "'");
    }
    config.policy.interventions_per_year = policy_obj.integer_or(
        "interventions_per_year", config.policy.interventions_per_year);
    config.policy.soc_trigger =
        policy_obj.number_or("soc_trigger", config.policy.soc_trigger);
    config.policy.prediction_window_days = policy_obj.integer_or(
        "prediction_window_days", config.policy.prediction_window_days);
    policy_obj.done();
  }
  if (const json* order = obj.get("order")) {
    detail::StrictObject order_obj(*order, "config.order");
    config.charge_before_consumption =
        order_obj.bool_or("charge_before_consumption", false);
    order_obj.done();
  }
  if (const json* fleet = obj.get("fleet")) {
    if (!fleet->is_array()) throw ConfigError("config.fleet: expected an array");
    int index = 0;
    for (const auto& entry : *fleet) {
      const std::string path = "config.fleet[" + std::to_string(index++) + "]";
      detail::StrictObject node_obj(entry, path);
      FleetEntry node;
      node.id = node_obj.string("id");
      std::tie(node.x_m, node.y_m) = detail::position_pair(
          node_obj.at("position_m"), path + ".position_m");
      node.profile = node_obj.string("profile");
      node.battery = node_obj.string("battery");
      node.initial_soc = node_obj.number_or("initial_soc", 1.0);
      if (node.initial_soc < 0.0 || node.initial_soc > 1.0) {
        throw ConfigError(path + ".initial_soc: must be in [0, 1]");
      }
      if (const json* mode = node_obj.get("report_mode")) {
        if (mode->is_string()) {
          if (mode->get<std::string>() != "every-uplink") {
            throw ConfigError(path + ".report_mode: expected \"every-uplink\" or {\"threshold_soc\": x}");
          }
          node.report_mode = ReportMode::every_uplink;
        } else {
          detail::StrictObject mode_obj(*mode, path + ".report_mode");
          node.report_mode = ReportMode::threshold;
          node.threshold_soc = mode_obj.number("threshold_soc");
          mode_obj.done();
        }
      }
      node_obj.done();
      config.fleet.push_back(std::move(node));
    }
  }
  if (const json* sweeps = obj.get("sweeps")) {
    detail::StrictObject sweep_obj(*sweeps, "config.sweeps");
    if (const json* v = sweep_obj.get("capacities_wh")) {
      config.sweeps.capacities_wh = detail::number_list(*v, "config.sweeps.capacities_wh");
    }
    if (const json* v = sweep_obj.get("charge_rates_per_h")) {
      config.sweeps.charge_rates_per_h =
          detail::number_list(*v, "config.sweeps.charge_rates_per_h");
    }
    if (const json* v = sweep_obj.get("charge_times_s")) {
      config.sweeps.charge_times_s = detail::number_list(*v, "config.sweeps.charge_times_s");
    }
    if (const json* v = sweep_obj.get("interventions_per_year")) {
      config.sweeps.interventions_per_year =
          detail::integer_list(*v, "config.sweeps.interventions_per_year");
    }
    sweep_obj.done();
  }
  obj.done();

  config.uav.wpt_model = config.ipt;
  config.uav.alignment = config.alignment;
  return config;
}

inline json scenario_to_json(const ScenarioConfig& config) {
  json root;
  root["name"] = config.name;
  if (!config.batteries.empty()) {
    json batteries = json::object();
    for (const auto& [name, spec] : config.batteries) {
      json b;
      b["chemistry"] = spec.chemistry;
      b["capacity_j"] = spec.capacity_j;
      b["nominal_voltage_v"] = spec.nominal_voltage_v;
      b["charge_rate_per_h"] = spec.charge_rate_per_h;
      b["self_discharge_per_year"] = spec.self_discharge_per_year;
      if (spec.cycle_life) b["cycle_life"] = *spec.cycle_life;
      batteries[name] = std::move(b);
    }
    root["batteries"] = std::move(batteries);
  }
  if (!config.profiles.empty()) {
    json profiles = json::object();
    for (const auto& [name, profile] : config.profiles) {
      json p;
      p["sleep_power_mw"] = profile.sleep_power_mw;
      json events = json::array();
      for (const auto& event : profile.events) {
        events.push_back({{"label", event.label},
                          {"power_mw", event.power_mw},
                          {"duration_s", event.duration_s},
                          {"occurrences_per_day", event.occurrences_per_day}});
      }
      p["events"] = std::move(events);
      p["losses_j_per_day"] = {{"self_discharge", profile.losses.e_sd_j_per_day},
                               {"conversion", profile.losses.e_conv_j_per_day},
                               {"leakage", profile.losses.e_leak_j_per_day}};
      profiles[name] = std::move(p);
    }
    root["profiles"] = std::move(profiles);
  }
  json ipt;
  switch (config.ipt.shape) {
    case IptFalloffShape::quadratic:
      ipt["shape"] = "quadratic";
      ipt["falloff_per_mm2"] = config.ipt.falloff;
      break;
    case IptFalloffShape::linear:
      ipt["shape"] = "linear";
      ipt["falloff_per_mm"] = config.ipt.falloff;
      break;
    case IptFalloffShape::table: {
      ipt["shape"] = "table";
      json points = json::array();
      for (const auto& [x, y] : config.ipt.table) points.push_back({x, y});
      ipt["table_points"] = std::move(points);
      break;
    }
  }
  ipt["peak_efficiency"] = config.ipt.peak_efficiency;
  ipt["cutoff_offset_mm"] = config.ipt.cutoff_offset_mm;
  ipt["coil_width_mm"] = config.ipt.coil_width_mm;
  ipt["coil_height_mm"] = config.ipt.coil_height_mm;
  root["wpt"]["ipt"] = std::move(ipt);
  root["wpt"]["rf"] = {{"frequency_hz", config.rf.frequency_hz},
                       {"combined_gain_db", config.rf.combined_gain_db},
                       {"path_loss_exponent", config.rf.path_loss_exponent},
                       {"anchor",
                        {{"distance_m", config.rf.anchor.distance_m},
                         {"tx_dbm", config.rf.anchor.tx_dbm},
                         {"rx_dbm", config.rf.anchor.rx_dbm}}}};
  root["wpt"]["limits"] = {{"ipt_power_ceiling_w", config.limits.ipt_power_ceiling_w},
                           {"cpt_power_ceiling_w", config.limits.cpt_power_ceiling_w},
                           {"rf_receivable_power_w", config.limits.rf_receivable_power_w},
                           {"coupled_efficiency", config.limits.coupled_efficiency}};
  const char* regime = config.alignment.regime == PositioningRegime::open
                           ? "open"
                           : config.alignment.regime == PositioningRegime::forested
                                 ? "forested"
                                 : "rtk";
  root["alignment"] = {{"regime", regime},
                       {"coarse_error_sigma_m", config.alignment.coarse_error_sigma_m},
                       {"fine_residual_sigma_mm", config.alignment.fine_residual_sigma_mm}};
  root["uav"] = {{"base_position_m", {config.uav.base_x_m, config.uav.base_y_m}},
                 {"sortie_energy_budget_j", config.uav.sortie_energy_budget_j},
                 {"transit_speed_m_per_s", config.uav.transit_speed_m_per_s},
                 {"transit_power_w", config.uav.transit_power_w},
                 {"hover_power_w", config.uav.hover_power_w},
                 {"max_charge_time_s", config.uav.max_charge_time_s}};
  root["policy"] = {{"kind", config.policy.kind == PolicyKind::fixed_calendar
                                 ? "fixed-calendar"
                                 : "soc-triggered"},
                    {"interventions_per_year", config.policy.interventions_per_year},
                    {"soc_trigger", config.policy.soc_trigger},
                    {"prediction_window_days", config.policy.prediction_window_days}};
  root["order"] = {{"charge_before_consumption", config.charge_before_consumption}};
  if (!config.fleet.empty()) {
    json fleet = json::array();
    for (const auto& node : config.fleet) {
      json n;
      n["id"] = node.id;
      n["position_m"] = {node.x_m, node.y_m};
      n["profile"] = node.profile;
      n["battery"] = node.battery;
      n["initial_soc"] = node.initial_soc;
      if (node.report_mode == ReportMode::every_uplink) {
        n["report_mode"] = "every-uplink";
      } else {
        n["report_mode"] = {{"threshold_soc", node.threshold_soc}};
      }
      fleet.push_back(std::move(n));
    }
    root["fleet"] = std::move(fleet);
  }
  if (!config.sweeps.empty()) {
    json sweeps = json::object();
    if (!config.sweeps.capacities_wh.empty()) {
      sweeps["capacities_wh"] = config.sweeps.capacities_wh;
    }
    if (!config.sweeps.charge_rates_per_h.empty()) {
      sweeps["charge_rates_per_h"] = config.sweeps.charge_rates_per_h;
    }
    if (!config.sweeps.charge_times_s.empty()) {
      sweeps["charge_times_s"] = config.sweeps.charge_times_s;
    }
    if (!config.sweeps.interventions_per_year.empty()) {
      sweeps["interventions_per_year"] = config.sweeps.interventions_per_year;
    }
    root["sweeps"] = std::move(sweeps);
  }
  return root;
}

inline ScenarioConfig load_scenario_text(const std::string& text,
                                         const std::string& fallback_name) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("config: invalid JSON: ") + err.what());
  }
  return parse_scenario(root, fallback_name);
}

inline ScenarioConfig load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_scenario_text(buffer.str(), path.stem().string());
}

/// Resolves profile/battery references into a runnable fleet.
inline FleetScenario build_fleet(const ScenarioConfig& config) {
  if (config.fleet.empty()) {
    throw ConfigError("config.fleet: scenario has no fleet to simulate");
  }
  FleetScenario scenario;
  scenario.uav = config.uav;
  scenario.policy = config.policy;
  scenario.charge_before_consumption = config.charge_before_consumption;
  for (const auto& entry : config.fleet) {
    auto profile_it = config.profiles.find(entry.profile);
    if (profile_it == config.profiles.end()) {
      throw ConfigError("config.fleet: node '" + entry.id +
                        "' references unknown profile '" + entry.profile + "'");
    }
    auto battery_it = config.batteries.find(entry.battery);
    if (battery_it == config.batteries.end()) {
      throw ConfigError("config.fleet: node '" + entry.id +
                        "' references unknown battery '" + entry.battery + "'");
    }
    FleetNode node;
    node.id = entry.id;
    node.x_m = entry.x_m;
    node.y_m = entry.y_m;
    node.profile = profile_it->second;
    node.battery = battery_at_soc(battery_it->second, entry.initial_soc);
    node.report_mode = entry.report_mode;
    node.report_threshold_soc = entry.threshold_soc;
    scenario.nodes.push_back(std::move(node));
  }
  return scenario;
}

}  // namespace aerprov
