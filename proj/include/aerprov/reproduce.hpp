#pragma once

#include <string>
#include <vector>

#include "aerprov/csv.hpp"
#include "aerprov/provisioning.hpp"
#include "aerprov/scenario.hpp"
#include "aerprov/sim.hpp"
#include "aerprov/svg.hpp"

namespace aerprov {

// Headline daily totals of the two bundled use cases, used as the figure
// grid inputs (losses at zero).
inline constexpr double kTreeNodeDailyJ = 22.7;
inline constexpr double kGasNodeDailyJ = 227.9;

inline constexpr double kFigureChargeTimeS = 300.0;
inline constexpr int kFigureInterventionsPerYear = 12;

struct FigureDataset {
  std::string name;        // file stem, e.g. "soc"
  std::string csv;
  std::string svg;
};

/// State-of-charge degradation of one node (22.7 J/day drain) over ten years
/// for a range of battery capacities, 1C charging, five-minute visits, twelve
/// per year. Shows the sawtooth and how undersized packs crash.
inline FigureDataset soc_figure(int horizon_days = 3650) {
  const std::vector<double> capacities_wh = {0.36, 1.80, 2.88};
  FigureDataset out;
  out.name = "soc";
  out.csv = "day,capacity_wh,soc\n";
  std::vector<SvgSeries> series;
  for (double capacity_wh : capacities_wh) {
    ClosedFormCase c{wh_to_joules(capacity_wh), 1.0, kFigureChargeTimeS,
                     kFigureInterventionsPerYear, kTreeNodeDailyJ};
    FleetScenario scenario = closed_form_scenario(c);
    scenario.uav.max_charge_time_s = kFigureChargeTimeS;
    const SimTrace trace = run(scenario, horizon_days, 0);
    SvgSeries s;
    s.label = format_number(capacity_wh) + " Wh";
    for (const auto& rec : trace.days) {
      out.csv += format_number(rec.day);
      out.csv += ',';
      out.csv += format_number(capacity_wh);
      out.csv += ',';
      out.csv += format_number(rec.soc);
      out.csv += '\n';
      s.points.push_back({static_cast<double>(rec.day), rec.soc});
    }
    series.push_back(std::move(s));
  }
  out.svg = render_line_chart("State of charge over time", "day",
                              "state of charge", series);
  return out;
}

/// Autonomy against charge time for 0.36/1.80 Wh packs at 1/2/5/10C, twelve
/// visits per year. Unlimited autonomy serializes as `inf`.
inline FigureDataset autonomy_vs_charge_time_figure(
    const SweepRanges& overrides = {}) {
  std::vector<double> capacities_wh = {0.36, 1.80};
  std::vector<double> rates = {1.0, 2.0, 5.0, 10.0};
  std::vector<double> times_s;
  for (int t = 0; t <= 900; t += 30) times_s.push_back(t);
  if (!overrides.capacities_wh.empty()) capacities_wh = overrides.capacities_wh;
  if (!overrides.charge_rates_per_h.empty()) rates = overrides.charge_rates_per_h;
  if (!overrides.charge_times_s.empty()) times_s = overrides.charge_times_s;

  std::vector<double> capacities_j;
  for (double wh : capacities_wh) capacities_j.push_back(wh_to_joules(wh));
  const auto rows = sweep_autonomy_vs_charge_time(
      capacities_j, rates, kFigureInterventionsPerYear, times_s,
      kTreeNodeDailyJ);

  FigureDataset out;
  out.name = "autonomy-vs-time";
  out.csv = "capacity_wh,charge_rate_per_h,charge_time_s,autonomy_days\n";
  std::vector<SvgSeries> series;
  for (const auto& row : rows) {
    const double capacity_wh = joules_to_wh(row.capacity_j);
    out.csv += format_number(capacity_wh);
    out.csv += ',';
    out.csv += format_number(row.charge_rate_per_h);
    out.csv += ',';
    out.csv += format_number(row.charge_time_s);
    out.csv += ',';
    out.csv += format_number(row.result.days);
    out.csv += '\n';
    const std::string label = format_number(capacity_wh) + " Wh @ " +
                              format_number(row.charge_rate_per_h) + "C";
    if (series.empty() || series.back().label != label) {
      series.push_back({label, {}});
    }
    series.back().points.push_back({row.charge_time_s, row.result.days});
  }
  out.svg = render_line_chart("Autonomy vs charge time", "charge time [s]",
                              "autonomy [days]", series);
  return out;
}

/// Smallest sustainable battery against visits per year for the two use
/// cases on 1C and 10C chemistries, five-minute visits.
inline FigureDataset capacity_vs_interventions_figure(
    const SweepRanges& overrides = {}) {
  const std::vector<SweepProfile> profiles = {{"tree-node", kTreeNodeDailyJ},
                                              {"gas-node", kGasNodeDailyJ}};
  std::vector<SweepChemistry> chemistries = {{"lco", 1.0}, {"lto", 10.0}};
  if (!overrides.charge_rates_per_h.empty()) {
    chemistries.clear();
    for (double rate : overrides.charge_rates_per_h) {
      chemistries.push_back({format_number(rate) + "C", rate});
    }
  }
  int n_first = 1;
  int n_last = 52;
  if (!overrides.interventions_per_year.empty()) {
    n_first = overrides.interventions_per_year.front();
    n_last = overrides.interventions_per_year.back();
  }
  const auto rows = sweep_capacity_vs_interventions(
      profiles, chemistries, kFigureChargeTimeS, n_first, n_last);

  FigureDataset out;
  out.name = "capacity-vs-n";
  out.csv =
      "profile,chemistry,charge_rate_per_h,interventions_per_year,"
      "min_capacity_j,min_capacity_wh\n";
  std::vector<SvgSeries> series;
  for (const auto& row : rows) {
    out.csv += row.profile;
    out.csv += ',';
    out.csv += row.chemistry;
    out.csv += ',';
    out.csv += format_number(row.charge_rate_per_h);
    out.csv += ',';
    out.csv += format_number(row.interventions_per_year);
    out.csv += ',';
    out.csv += format_number(row.min_capacity_j);
    out.csv += ',';
    out.csv += format_number(joules_to_wh(row.min_capacity_j));
    out.csv += '\n';
    const std::string label = row.profile + " / " + row.chemistry;
    if (series.empty() || series.back().label != label) {
      series.push_back({label, {}});
    }
    series.back().points.push_back(
        {static_cast<double>(row.interventions_per_year), row.min_capacity_j});
  }
  out.svg = render_line_chart("Smallest sustainable capacity vs visits/year",
                              "interventions per year", "capacity [J]", series);
  return out;
}

inline std::vector<std::string> figure_names() {
  return {"soc", "autonomy-vs-time", "capacity-vs-n"};
}

inline FigureDataset make_figure(const std::string& name,
                                 const SweepRanges& overrides = {}) {
  if (name == "soc") return soc_figure();
  if (name == "autonomy-vs-time") return autonomy_vs_charge_time_figure(overrides);
  if (name == "capacity-vs-n") return capacity_vs_interventions_figure(overrides);
  std::string known;
  for (const auto& fig : figure_names()) {
    if (!known.empty()) known += ", ";
    known += fig;
  }
  throw ConfigError("unknown figure '" + name + "' (available: " + known + ")");
}

}  // namespace aerprov
