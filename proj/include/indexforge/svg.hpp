#pragma once

#include <string>
#include <vector>

#include "indexforge/simulation.hpp"

namespace indexforge {

// One panel: one box per indicator, value axis from 0 to the largest whisker.
// Whiskers sit at min/max, the box at q1/q3, a line at the median and a
// circle at the mean. Geometry is calibrated by the data-axis-max /
// data-plot-top / data-plot-bottom attributes on the root element, so parsed
// pixel coordinates invert affinely to the summary numbers.
std::string render_boxplot_svg(const std::string& title,
                               const std::vector<std::string>& indicator_names,
                               const std::vector<BoxStats>& boxes);

}  // namespace indexforge
