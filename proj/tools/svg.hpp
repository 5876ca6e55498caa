#pragma once

#include <string>
#include <utility>
#include <vector>

namespace leja::tools {

/// Minimal log-log scatter plot with a fitted power-law line and a slope
/// annotation. Deterministic output: no timestamps, fixed formatting.
std::string render_loglog_svg(const std::vector<std::pair<double, double>>& points,
                              double slope, double intercept,
                              const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label);

} // namespace leja::tools
