#pragma once

#include <cmath>
#include <stdexcept>

namespace aerprov {

inline constexpr double kSecondsPerHour = 3600.0;
inline constexpr double kSecondsPerDay = 86400.0;
inline constexpr double kDaysPerYear = 365.0;

inline double wh_to_joules(double watt_hours) {
  if (watt_hours < 0.0) {
    throw std::invalid_argument("wh_to_joules: energy must be >= 0");
  }
  return watt_hours * kSecondsPerHour;
}

inline double joules_to_wh(double joules) { return joules / kSecondsPerHour; }

inline double milliwatts_to_watts(double mw) { return mw / 1000.0; }

inline double dbm_to_watts(double dbm) {
  return 1e-3 * std::pow(10.0, dbm / 10.0);
}

inline double watts_to_dbm(double watts) {
  if (watts <= 0.0) {
    throw std::invalid_argument("watts_to_dbm: power must be > 0");
  }
  return 10.0 * std::log10(watts * 1e3);
}

}  // namespace aerprov
