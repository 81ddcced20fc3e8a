#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "aerprov/csv.hpp"

namespace aerprov {

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// Minimal line-chart renderer used for the optional figure SVGs; the CSVs
/// remain the normative output. Non-finite points are skipped.
inline std::string render_line_chart(const std::string& title,
                                     const std::string& x_label,
                                     const std::string& y_label,
                                     const std::vector<SvgSeries>& series) {
  constexpr int width = 880;
  constexpr int height = 540;
  constexpr int margin_left = 70;
  constexpr int margin_right = 180;
  constexpr int margin_top = 46;
  constexpr int margin_bottom = 56;
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

  double min_x = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  if (!std::isfinite(min_x)) {
    min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  }
  if (max_x == min_x) max_x = min_x + 1.0;
  if (max_y == min_y) max_y = min_y + 1.0;

  const double plot_w = width - margin_left - margin_right;
  const double plot_h = height - margin_top - margin_bottom;
  auto sx = [&](double x) {
    return margin_left + (x - min_x) / (max_x - min_x) * plot_w;
  };
  auto sy = [&](double y) {
    return margin_top + plot_h - (y - min_y) / (max_y - min_y) * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + std::to_string(width / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + title +
         "</text>\n";

  for (int i = 0; i <= 5; ++i) {
    const double fx = min_x + (max_x - min_x) * i / 5.0;
    const double fy = min_y + (max_y - min_y) * i / 5.0;
    const double px = sx(fx);
    const double py = sy(fy);
    svg += "<line x1=\"" + format_number(px) + "\" y1=\"" +
           std::to_string(margin_top) + "\" x2=\"" + format_number(px) +
           "\" y2=\"" + std::to_string(margin_top + (int)plot_h) +
           "\" stroke=\"#dddddd\"/>\n";
    svg += "<line x1=\"" + std::to_string(margin_left) + "\" y1=\"" +
           format_number(py) + "\" x2=\"" +
           std::to_string(margin_left + (int)plot_w) + "\" y2=\"" +
           format_number(py) + "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + format_number(px) + "\" y=\"" +
           std::to_string(height - margin_bottom + 18) +
           "\" text-anchor=\"middle\">" + format_number(fx) + "</text>\n";
    svg += "<text x=\"" + std::to_string(margin_left - 8) + "\" y=\"" +
           format_number(py + 4) + "\" text-anchor=\"end\">" +
           format_number(fy) + "</text>\n";
  }
  svg += "<rect x=\"" + std::to_string(margin_left) + "\" y=\"" +
         std::to_string(margin_top) + "\" width=\"" + format_number(plot_w) +
         "\" height=\"" + format_number(plot_h) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";
  svg += "<text x=\"" + std::to_string(margin_left + (int)(plot_w / 2)) +
         "\" y=\"" + std::to_string(height - 12) +
         "\" text-anchor=\"middle\">" + x_label + "</text>\n";
  svg += "<text x=\"18\" y=\"" + std::to_string(margin_top + (int)(plot_h / 2)) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         std::to_string(margin_top + (int)(plot_h / 2)) + ")\">" + y_label +
         "</text>\n";

  int color_index = 0;
  int legend_y = margin_top + 10;
  for (const auto& s : series) {
    const char* color = palette[color_index % 8];
    ++color_index;
    std::string path;
    bool pen_down = false;
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) {
        pen_down = false;
        continue;
      }
      path += pen_down ? "L" : "M";
      path += format_number(sx(x)) + " " + format_number(sy(y)) + " ";
      pen_down = true;
    }
    if (!path.empty()) {
      svg += "<path d=\"" + path +
             "\" fill=\"none\" stroke-width=\"1.6\" stroke=\"" + color +
             "\"/>\n";
    }
    const int lx = width - margin_right + 12;
    svg += "<line x1=\"" + std::to_string(lx) + "\" y1=\"" +
           std::to_string(legend_y - 4) + "\" x2=\"" + std::to_string(lx + 22) +
           "\" y2=\"" + std::to_string(legend_y - 4) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + std::to_string(lx + 28) + "\" y=\"" +
           std::to_string(legend_y) + "\">" + s.label + "</text>\n";
    legend_y += 18;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace aerprov
