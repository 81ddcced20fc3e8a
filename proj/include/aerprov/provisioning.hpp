#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "aerprov/battery.hpp"
#include "aerprov/units.hpp"

namespace aerprov {

/// Inputs of the closed-form provisioning model: a yearly visit rate, the
/// per-visit charge window, the battery, and the node's total daily drain
/// (operating energy plus losses).
struct ProvisioningParams {
  int interventions_per_year = 1;
  double charge_time_s = 0.0;
  BatterySpec battery;
  double daily_energy_j = 0.0;

  void validate() const {
    if (interventions_per_year < 1) {
      throw std::invalid_argument(
          "ProvisioningParams: interventions_per_year must be >= 1");
    }
    if (charge_time_s < 0.0) {
      throw std::invalid_argument(
          "ProvisioningParams: charge_time_s must be >= 0");
    }
    if (daily_energy_j < 0.0) {
      throw std::invalid_argument(
          "ProvisioningParams: daily_energy_j must be >= 0");
    }
    battery.validate();
  }
};

struct AutonomyResult {
  double days = 0.0;  // +infinity when charging outpaces the drain
  double charged_per_intervention_j = 0.0;
  double required_min_j = 0.0;
  bool bridges_interval = false;  // capacity exceeds the inter-visit drain

  bool unlimited() const { return std::isinf(days); }
};

/// Energy a visit can push into the battery: linear in charge time at the
/// pack's C-rate. Deliberately unclamped — the headroom clamp is the
/// simulator's job, this is the closed-form quantity.
inline double charged_per_intervention_j(const ProvisioningParams& params) {
  params.validate();
  return params.battery.capacity_j *
         (params.battery.charge_rate_per_h / kSecondsPerHour) *
         params.charge_time_s;
}

/// Minimum energy that bridges the gap between two visits at n visits/year.
inline double required_min_energy_j(double daily_energy_j,
                                    int interventions_per_year) {
  if (interventions_per_year < 1) {
    throw std::invalid_argument(
        "required_min_energy_j: interventions_per_year must be >= 1");
  }
  if (daily_energy_j < 0.0) {
    throw std::invalid_argument(
        "required_min_energy_j: daily_energy_j must be >= 0");
  }
  return daily_energy_j * kDaysPerYear / interventions_per_year;
}

/// Days until the battery runs flat under the yearly energy balance, or
/// unlimited when the yearly recharge covers the yearly drain.
inline AutonomyResult autonomy(const ProvisioningParams& params) {
  params.validate();
  AutonomyResult result;
  result.charged_per_intervention_j = charged_per_intervention_j(params);
  result.required_min_j =
      required_min_energy_j(params.daily_energy_j, params.interventions_per_year);
  result.bridges_interval = params.battery.capacity_j > result.required_min_j;
  const double denominator =
      kDaysPerYear * params.daily_energy_j -
      result.charged_per_intervention_j * params.interventions_per_year;
  if (denominator <= 0.0) {
    result.days = std::numeric_limits<double>::infinity();
  } else {
    result.days = kDaysPerYear * params.battery.capacity_j / denominator;
  }
  return result;
}

/// Open lower bound on the capacity that keeps a node running indefinitely:
/// large enough to take in the inter-visit drain within the charge window,
/// and large enough to store it. Capacities strictly above the bound qualify.
inline double min_capacity_j(double daily_energy_j, int interventions_per_year,
                             double charge_rate_per_h, double charge_time_s) {
  if (charge_rate_per_h <= 0.0) {
    throw std::invalid_argument("min_capacity_j: charge_rate_per_h must be > 0");
  }
  if (charge_time_s <= 0.0) {
    throw std::invalid_argument("min_capacity_j: charge_time_s must be > 0");
  }
  const double required =
      required_min_energy_j(daily_energy_j, interventions_per_year);
  const double intake_bound =
      required * kSecondsPerHour / (charge_rate_per_h * charge_time_s);
  return std::max(intake_bound, required);
}

/// True when the charge-window term decides the bound (C-rate times charge
/// time under one hour); otherwise the storage term binds.
inline bool intake_term_binds(double charge_rate_per_h, double charge_time_s) {
  return charge_rate_per_h * charge_time_s < kSecondsPerHour;
}

struct AutonomySweepRow {
  double capacity_j = 0.0;
  double charge_rate_per_h = 0.0;
  double charge_time_s = 0.0;
  AutonomyResult result;
};

inline std::vector<AutonomySweepRow> sweep_autonomy_vs_charge_time(
    const std::vector<double>& capacities_j,
    const std::vector<double>& charge_rates_per_h, int interventions_per_year,
    const std::vector<double>& charge_times_s, double daily_energy_j) {
  if (capacities_j.empty() || charge_rates_per_h.empty() ||
      charge_times_s.empty()) {
    throw std::invalid_argument("sweep_autonomy_vs_charge_time: empty input");
  }
  std::vector<AutonomySweepRow> rows;
  rows.reserve(capacities_j.size() * charge_rates_per_h.size() *
               charge_times_s.size());
  for (double capacity : capacities_j) {
    for (double rate : charge_rates_per_h) {
      for (double time_s : charge_times_s) {
        BatterySpec spec{"sweep", 3.6, capacity, rate, 0.0, std::nullopt};
        ProvisioningParams params{interventions_per_year, time_s, spec,
                                  daily_energy_j};
        rows.push_back({capacity, rate, time_s, autonomy(params)});
      }
    }
  }
  return rows;
}

struct SweepProfile {
  std::string name;
  double daily_energy_j = 0.0;
};

struct SweepChemistry {
  std::string name;
  double charge_rate_per_h = 0.0;
};

struct CapacitySweepRow {
  std::string profile;
  std::string chemistry;
  double charge_rate_per_h = 0.0;
  int interventions_per_year = 0;
  double min_capacity_j = 0.0;
};

inline std::vector<CapacitySweepRow> sweep_capacity_vs_interventions(
    const std::vector<SweepProfile>& profiles,
    const std::vector<SweepChemistry>& chemistries, double charge_time_s,
    int n_first, int n_last) {
  if (profiles.empty() || chemistries.empty() || n_first < 1 ||
      n_last < n_first) {
    throw std::invalid_argument("sweep_capacity_vs_interventions: bad input");
  }
  std::vector<CapacitySweepRow> rows;
  rows.reserve(profiles.size() * chemistries.size() *
               static_cast<std::size_t>(n_last - n_first + 1));
  for (const auto& profile : profiles) {
    for (const auto& chem : chemistries) {
      for (int n = n_first; n <= n_last; ++n) {
        rows.push_back({profile.name, chem.name, chem.charge_rate_per_h, n,
                        min_capacity_j(profile.daily_energy_j, n,
                                       chem.charge_rate_per_h, charge_time_s)});
      }
    }
  }
  return rows;
}

}  // namespace aerprov
