#pragma once

#include <span>
#include <string>
#include <vector>

#include "canderson/experiments.hpp"

namespace canderson {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool dashed = false;
};

struct PlotStyle {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

// All renderers return a standalone SVG document. Series lines are drawn in
// a <g class="data"> group whose transform maps plot coordinates (log10 of
// the data on log axes) to pixels, so path coordinates in the output are plot
// coordinates. Non-finite input (or non-positive values on log axes) raises
// InvalidInput listing the offending indices.

std::string render_line_plot(std::span<const PlotSeries> series, const PlotStyle& style);

/// xi against gamma on [0, 1]^2, points colored by gamma, with the xi = gamma
/// guide from (0, 0) to (1, 1).
std::string render_xi_gamma_scatter(std::span<const StateMetrics> states,
                                    const std::string& title);

struct HeatmapData {
  /// Column lower edges (length cols) and upper edge of the last column.
  std::vector<double> x_edges;
  std::vector<double> y_edges;
  /// Row-major values[row * cols + col]; row = y bin, col = x bin.
  std::vector<double> values;
  /// Cells with present = false render as blank (light grey).
  std::vector<bool> present;
};

std::string render_heatmap(const HeatmapData& data, const PlotStyle& style);

/// Heatmap of mean xi over (lambda, <E_R> bin) from a phase scan; only
/// reported bins are colored.
HeatmapData phase_heatmap(const PhaseGrid& grid);

}  // namespace canderson
