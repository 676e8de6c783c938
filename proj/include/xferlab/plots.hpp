#pragma once
// Self-contained SVG emission for sweep results: mean-accuracy line plots
// with standard-error bars (one series per arm), accuracy heatmaps over the
// (dimension, shared-signal-norm) grid, their thresholded 0/1 versions, and a
// regime-prediction overlay. No external assets; output is deterministic for
// identical inputs.

#include <string>
#include <vector>

#include "xferlab/experiments.hpp"

namespace xferlab::plots {

// One series per arm, points ordered by axis value, whiskers at +-1 SE.
// Stats with axis2 set are rejected (that shape belongs to the heatmap).
std::string line_plot_svg(const std::vector<exp::CellStat>& stats, const std::string& title,
                          const std::string& x_label);

// Mean accuracy per cell, color-ramped and numerically labeled.
std::string heatmap_svg(const exp::HeatmapGrid& g, const std::string& title);

// Binary version: cells at or above `threshold` in one color, the rest in the
// other, mirroring the thresholded grids used for the phase picture.
std::string truncated_heatmap_svg(const exp::HeatmapGrid& g, double threshold);

// Cells colored by the predicted regime string stored in the grid.
std::string regime_heatmap_svg(const exp::HeatmapGrid& g, const std::string& title);

} // namespace xferlab::plots
