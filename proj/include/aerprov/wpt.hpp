#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aerprov/rng.hpp"
#include "aerprov/units.hpp"

namespace aerprov {

enum class IptFalloffShape { quadratic, linear, table };

/// Coil-to-coil link efficiency versus lateral misalignment. The default is
/// calibrated to a 32x42 mm receiver coil whose efficiency drops from 85% at
/// perfect alignment to 70% at 12 mm offset; the falloff between published
/// points is quadratic by default, with linear and table-interpolated
/// alternatives selectable.
struct IptCoilModel {
  double peak_efficiency = 0.85;
  double falloff = 0.15 / 144.0;  // per mm^2 (quadratic) or per mm (linear)
  double cutoff_offset_mm = 28.565713714171397;  // zero of the default curve
  IptFalloffShape shape = IptFalloffShape::quadratic;
  std::vector<std::pair<double, double>> table;  // (offset mm, efficiency)
  double coil_width_mm = 32.0;
  double coil_height_mm = 42.0;

  void validate() const {
    if (peak_efficiency <= 0.0 || peak_efficiency > 1.0) {
      throw std::invalid_argument(
          "IptCoilModel: peak_efficiency must be in (0, 1]");
    }
    if (falloff < 0.0) {
      throw std::invalid_argument("IptCoilModel: falloff must be >= 0");
    }
    if (cutoff_offset_mm <= 0.0) {
      throw std::invalid_argument("IptCoilModel: cutoff_offset_mm must be > 0");
    }
  }
};

/// Quadratic model through two (offset, efficiency) calibration points, cut
/// off where the curve reaches zero.
inline IptCoilModel calibrated_ipt_model(double peak_efficiency,
                                         double reference_offset_mm,
                                         double reference_efficiency) {
  if (reference_offset_mm <= 0.0 || reference_efficiency >= peak_efficiency) {
    throw std::invalid_argument("calibrated_ipt_model: bad reference point");
  }
  IptCoilModel model;
  model.peak_efficiency = peak_efficiency;
  model.falloff = (peak_efficiency - reference_efficiency) /
                  (reference_offset_mm * reference_offset_mm);
  model.cutoff_offset_mm = std::sqrt(peak_efficiency / model.falloff);
  return model;
}

inline double ipt_efficiency(double offset_mm, const IptCoilModel& model) {
  if (offset_mm < 0.0) {
    throw std::invalid_argument("ipt_efficiency: offset_mm must be >= 0");
  }
  model.validate();
  if (offset_mm > model.cutoff_offset_mm) return 0.0;
  switch (model.shape) {
    case IptFalloffShape::quadratic:
      return std::max(0.0, model.peak_efficiency -
                               model.falloff * offset_mm * offset_mm);
    case IptFalloffShape::linear:
      return std::max(0.0, model.peak_efficiency - model.falloff * offset_mm);
    case IptFalloffShape::table: {
      if (model.table.empty()) {
        throw std::invalid_argument("ipt_efficiency: empty lookup table");
      }
      if (offset_mm <= model.table.front().first) {
        return model.table.front().second;
      }
      for (std::size_t i = 1; i < model.table.size(); ++i) {
        const auto& [x0, y0] = model.table[i - 1];
        const auto& [x1, y1] = model.table[i];
        if (offset_mm <= x1) {
          return y0 + (y1 - y0) * (offset_mm - x0) / (x1 - x0);
        }
      }
      return model.table.back().second;
    }
  }
  return 0.0;
}

/// Anchor measurement the RF path-loss model is pinned to.
struct RfAnchor {
  double distance_m = 0.30;
  double tx_dbm = 27.0;
  double rx_dbm = 10.0;
};

/// Parametric RF link budget: spreading loss with a configurable exponent
/// plus a calibration offset fixed at construction so the anchor point is
/// reproduced exactly.
struct RfLinkModel {
  double frequency_hz = 868e6;
  double combined_gain_db = 0.0;
  double path_loss_exponent = 2.0;
  RfAnchor anchor;
  double calibration_offset_db = 0.0;
};

inline double rf_path_loss_db(double distance_m, const RfLinkModel& model) {
  if (distance_m <= 0.0) {
    throw std::invalid_argument("rf_path_loss_db: distance_m must be > 0");
  }
  return 10.0 * model.path_loss_exponent * std::log10(distance_m);
}

inline RfLinkModel calibrated_rf_model(double frequency_hz,
                                       double combined_gain_db,
                                       double path_loss_exponent,
                                       const RfAnchor& anchor) {
  RfLinkModel model{frequency_hz, combined_gain_db, path_loss_exponent, anchor,
                    0.0};
  model.calibration_offset_db =
      anchor.rx_dbm - (anchor.tx_dbm + combined_gain_db -
                       rf_path_loss_db(anchor.distance_m, model));
  return model;
}

inline RfLinkModel default_rf_model() {
  return calibrated_rf_model(868e6, 0.0, 2.0, RfAnchor{});
}

inline double rf_received_power_dbm(double tx_dbm, double distance_m,
                                    const RfLinkModel& model) {
  return tx_dbm + model.combined_gain_db - rf_path_loss_db(distance_m, model) +
         model.calibration_offset_db;
}

inline double transfer_time_s(double energy_j, double received_power_w) {
  if (received_power_w <= 0.0) {
    throw std::invalid_argument("transfer_time_s: power must be > 0");
  }
  if (energy_j < 0.0) {
    throw std::invalid_argument("transfer_time_s: energy must be >= 0");
  }
  return energy_j / received_power_w;
}

inline double required_link_power_w(double energy_j, double time_s) {
  if (time_s <= 0.0) {
    throw std::invalid_argument("required_link_power_w: time must be > 0");
  }
  if (energy_j < 0.0) {
    throw std::invalid_argument("required_link_power_w: energy must be >= 0");
  }
  return energy_j / time_s;
}

enum class WptTechnology { ipt, cpt, rf };

inline std::string technology_name(WptTechnology tech) {
  switch (tech) {
    case WptTechnology::ipt: return "ipt";
    case WptTechnology::cpt: return "cpt";
    case WptTechnology::rf: return "rf";
  }
  return "?";
}

struct TechnologyRequirement {
  double energy_j = 0.0;
  double time_s = 0.0;
  WptTechnology technology = WptTechnology::ipt;
};

/// Power classes per technology: coupled links (IPT/CPT) reach beyond a
/// kilowatt at ~90% efficiency; an RF link is capped by what the receiver can
/// legally and physically harvest, default 10 dBm.
struct FeasibilityLimits {
  double ipt_power_ceiling_w = 1000.0;
  double cpt_power_ceiling_w = 1000.0;
  double rf_receivable_power_w = 0.01;
  double coupled_efficiency = 0.90;
};

struct Assessment {
  WptTechnology technology = WptTechnology::ipt;
  bool feasible = false;
  double required_power_w = 0.0;
  double power_ceiling_w = 0.0;
  std::vector<std::string> reasons;
};

inline Assessment assess_technology(const TechnologyRequirement& req,
                                    const FeasibilityLimits& limits = {}) {
  if (req.energy_j < 0.0 || req.time_s <= 0.0) {
    throw std::invalid_argument("assess_technology: invalid requirement");
  }
  Assessment out;
  out.technology = req.technology;
  out.required_power_w = required_link_power_w(req.energy_j, req.time_s);
  switch (req.technology) {
    case WptTechnology::ipt:
      out.power_ceiling_w = limits.ipt_power_ceiling_w;
      break;
    case WptTechnology::cpt:
      out.power_ceiling_w = limits.cpt_power_ceiling_w;
      break;
    case WptTechnology::rf:
      out.power_ceiling_w = limits.rf_receivable_power_w;
      break;
  }
  out.feasible = out.required_power_w <= out.power_ceiling_w;
  if (req.technology == WptTechnology::rf) {
    out.reasons.push_back(out.feasible ? "within-rf-receivable-power"
                                       : "required-power-exceeds-rf-receivable");
    out.reasons.push_back("rf-end-to-end-efficiency-low");
  } else {
    out.reasons.push_back(out.feasible ? "within-coupled-power-class"
                                       : "required-power-exceeds-coupled-class");
    out.reasons.push_back("coupled-efficiency-class-0.90");
  }
  return out;
}

enum class PositioningRegime { open, forested, rtk };

/// Positioning error budget: a coarse GNSS-class sigma that gets the craft
/// near the node, and the fine residual (after the last-centimeters alignment
/// step) that actually offsets the coils.
struct AlignmentModel {
  PositioningRegime regime = PositioningRegime::rtk;
  double coarse_error_sigma_m = 0.01;
  double fine_residual_sigma_mm = 0.0;

  void validate() const {
    if (coarse_error_sigma_m < 0.0 || fine_residual_sigma_mm < 0.0) {
      throw std::invalid_argument("AlignmentModel: sigmas must be >= 0");
    }
  }
};

inline double coarse_sigma_for_regime(PositioningRegime regime) {
  switch (regime) {
    case PositioningRegime::open: return 2.0;
    case PositioningRegime::forested: return 5.0;
    case PositioningRegime::rtk: return 0.01;
  }
  return 0.0;
}

inline AlignmentModel alignment_preset(PositioningRegime regime,
                                       double fine_residual_sigma_mm) {
  return AlignmentModel{regime, coarse_sigma_for_regime(regime),
                        fine_residual_sigma_mm};
}

/// Absolute radial coil offset for one landing attempt, half-normal with the
/// model's fine residual sigma. Always zero when the sigma is zero.
inline double sample_alignment_mm(const AlignmentModel& model,
                                  DeterministicRng& rng) {
  model.validate();
  return rng.half_normal(model.fine_residual_sigma_mm);
}

}  // namespace aerprov
