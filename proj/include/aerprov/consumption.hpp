#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "aerprov/units.hpp"

namespace aerprov {

/// One duty-cycled activity: the node wakes, draws `power_mw` for
/// `duration_s`, `occurrences_per_day` times a day.
struct ActivityEvent {
  std::string label;
  double power_mw = 0.0;
  double duration_s = 0.0;
  double occurrences_per_day = 0.0;

  void validate() const {
    if (power_mw < 0.0 || duration_s < 0.0 || occurrences_per_day < 0.0) {
      throw std::invalid_argument("ActivityEvent '" + label +
                                  "': fields must be >= 0");
    }
  }
};

/// Parasitic drains in J/day: battery shelf loss, converter overhead,
/// leakage into always-connected circuitry.
struct LossProfile {
  double e_sd_j_per_day = 0.0;
  double e_conv_j_per_day = 0.0;
  double e_leak_j_per_day = 0.0;

  void validate() const {
    if (e_sd_j_per_day < 0.0 || e_conv_j_per_day < 0.0 ||
        e_leak_j_per_day < 0.0) {
      throw std::invalid_argument("LossProfile: components must be >= 0");
    }
  }
};

struct NodeProfile {
  std::string name;
  double sleep_power_mw = 0.0;
  std::vector<ActivityEvent> events;
  LossProfile losses;
};

inline double event_energy_j(const ActivityEvent& event) {
  event.validate();
  return milliwatts_to_watts(event.power_mw) * event.duration_s;
}

inline double active_seconds_per_day(const NodeProfile& profile) {
  double total = 0.0;
  for (const auto& event : profile.events) {
    total += event.duration_s * event.occurrences_per_day;
  }
  return total;
}

/// Daily operating energy: every event's per-occurrence energy times its
/// rate, plus sleep power over the seconds the node is not active.
inline double daily_consumption_j(const NodeProfile& profile) {
  if (profile.sleep_power_mw < 0.0) {
    throw std::invalid_argument("NodeProfile '" + profile.name +
                                "': sleep_power_mw must be >= 0");
  }
  const double active_s = active_seconds_per_day(profile);
  if (active_s > kSecondsPerDay) {
    throw std::invalid_argument("NodeProfile '" + profile.name +
                                "': active time exceeds one day");
  }
  double total = 0.0;
  for (const auto& event : profile.events) {
    total += event_energy_j(event) * event.occurrences_per_day;
  }
  total += milliwatts_to_watts(profile.sleep_power_mw) *
           (kSecondsPerDay - active_s);
  return total;
}

inline double daily_losses_j(const LossProfile& losses) {
  losses.validate();
  return losses.e_sd_j_per_day + losses.e_conv_j_per_day +
         losses.e_leak_j_per_day;
}

inline double daily_energy_j(const NodeProfile& profile) {
  return daily_consumption_j(profile) + daily_losses_j(profile.losses);
}

// Bundled use-case profiles: a low-power sap-flow monitor and a heated
// gas sensor, both uplinking a 20-byte LoRaWAN SF12 frame every 15 minutes.
inline NodeProfile tree_node_profile() {
  return NodeProfile{
      "tree-node",
      0.025,
      {{"lorawan-sf12", 111.15, 1.81, 96.0}, {"sensor", 65.7, 0.19, 96.0}},
      {}};
}

inline NodeProfile gas_node_profile() {
  return NodeProfile{
      "gas-node",
      0.025,
      {{"lorawan-sf12", 111.15, 1.81, 96.0}, {"sensor", 23.4, 92.0, 96.0}},
      {}};
}

}  // namespace aerprov
