#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "aerprov/units.hpp"

namespace aerprov {

/// Chemistry and sizing parameters of a cell or pack.
///
/// charge_rate_per_h is the C-rate: 1.0 fills an empty battery in one hour.
/// A value of 0 marks a non-rechargeable chemistry. self_discharge_per_year
/// is the fraction of full capacity lost per year of shelf time.
struct BatterySpec {
  std::string chemistry;
  double nominal_voltage_v = 0.0;
  double capacity_j = 0.0;
  double charge_rate_per_h = 0.0;
  double self_discharge_per_year = 0.0;
  std::optional<double> cycle_life;

  bool rechargeable() const { return charge_rate_per_h > 0.0; }

  void validate() const {
    if (capacity_j <= 0.0) {
      throw std::invalid_argument("BatterySpec: capacity_j must be > 0");
    }
    if (nominal_voltage_v <= 0.0) {
      throw std::invalid_argument("BatterySpec: nominal_voltage_v must be > 0");
    }
    if (charge_rate_per_h < 0.0) {
      throw std::invalid_argument("BatterySpec: charge_rate_per_h must be >= 0");
    }
    if (self_discharge_per_year < 0.0 || self_discharge_per_year >= 1.0) {
      throw std::invalid_argument(
          "BatterySpec: self_discharge_per_year must be in [0, 1)");
    }
  }
};

/// Current energy content. stored_j stays within [0, capacity];
/// cumulative_charged_j only ever grows and feeds cycle accounting.
struct BatteryState {
  BatterySpec spec;
  double stored_j = 0.0;
  double cumulative_charged_j = 0.0;
};

inline BatteryState battery_at_soc(const BatterySpec& spec, double soc) {
  spec.validate();
  if (soc < 0.0 || soc > 1.0) {
    throw std::invalid_argument("battery_at_soc: soc must be in [0, 1]");
  }
  return BatteryState{spec, spec.capacity_j * soc, 0.0};
}

inline BatteryState full_battery(const BatterySpec& spec) {
  return battery_at_soc(spec, 1.0);
}

inline BatteryState empty_battery(const BatterySpec& spec) {
  return battery_at_soc(spec, 0.0);
}

struct ChargeResult {
  BatteryState state;
  double stored_j = 0.0;  // amount that actually landed in the battery
};

/// C-rate-limited charging, linear in time, clamped to the free headroom.
inline ChargeResult charge(const BatteryState& state, double duration_s) {
  if (duration_s < 0.0) {
    throw std::invalid_argument("charge: duration_s must be >= 0");
  }
  const double candidate = state.spec.capacity_j *
                           (state.spec.charge_rate_per_h / kSecondsPerHour) *
                           duration_s;
  const double headroom = state.spec.capacity_j - state.stored_j;
  const double amount = std::min(candidate, headroom);
  BatteryState next = state;
  next.stored_j += amount;
  next.cumulative_charged_j += amount;
  return ChargeResult{next, amount};
}

/// Constant per-day shelf loss, a fixed fraction of full capacity (not of the
/// current fill level), floored at empty.
inline BatteryState self_discharge(const BatteryState& state, double days) {
  if (days < 0.0) {
    throw std::invalid_argument("self_discharge: days must be >= 0");
  }
  const double loss = state.spec.capacity_j *
                      (state.spec.self_discharge_per_year / kDaysPerYear) *
                      days;
  BatteryState next = state;
  next.stored_j = std::max(0.0, next.stored_j - loss);
  return next;
}

inline double self_discharge_j_per_day(const BatterySpec& spec) {
  return spec.capacity_j * spec.self_discharge_per_year / kDaysPerYear;
}

inline double soc(const BatteryState& state) {
  return state.stored_j / state.spec.capacity_j;
}

inline double equivalent_full_cycles(const BatteryState& state) {
  return state.cumulative_charged_j / state.spec.capacity_j;
}

/// True once the accumulated charge throughput exceeds the spec's cycle life.
/// Informational only; nothing stops charging past it.
inline bool cycle_life_exceeded(const BatteryState& state) {
  return state.spec.cycle_life &&
         equivalent_full_cycles(state) > *state.spec.cycle_life;
}

// Catalog defaults. Voltages and rates for alkaline/LCO/LTO; LTO's nominal
// voltage and the self-discharge/cycle-life figures are catalog defaults,
// overridable from scenario configuration.
inline BatterySpec alkaline_spec(double capacity_j) {
  return BatterySpec{"alkaline", 1.5, capacity_j, 0.0, 0.02, std::nullopt};
}

inline BatterySpec lco_spec(double capacity_j) {
  return BatterySpec{"lco", 3.6, capacity_j, 1.0, 0.03, 500.0};
}

inline BatterySpec lto_spec(double capacity_j) {
  return BatterySpec{"lto", 2.4, capacity_j, 10.0, 0.03, 10000.0};
}

inline std::optional<BatterySpec> chemistry_defaults(const std::string& name,
                                                     double capacity_j) {
  if (name == "alkaline") return alkaline_spec(capacity_j);
  if (name == "lco") return lco_spec(capacity_j);
  if (name == "lto") return lto_spec(capacity_j);
  return std::nullopt;
}

}  // namespace aerprov
