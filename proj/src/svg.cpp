#include "indexforge/svg.hpp"

#include <algorithm>

#include "indexforge/errors.hpp"
#include "indexforge/io_util.hpp"

namespace indexforge {

namespace {

constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 48.0;
constexpr double kMarginBottom = 48.0;
constexpr double kSlotWidth = 84.0;
constexpr double kBoxWidth = 42.0;
constexpr double kPlotHeight = 320.0;

std::string attr(const std::string& name, const std::string& value) {
  return " " + name + "=\"" + value + "\"";
}

std::string attr(const std::string& name, double value) {
  return attr(name, format_double(value));
}

std::string line(const char* cls, double x1, double y1, double x2, double y2) {
  return "  <line" + attr("class", cls) + attr("x1", x1) + attr("y1", y1) + attr("x2", x2) +
         attr("y2", y2) + " stroke=\"black\"/>\n";
}

}  // namespace

std::string render_boxplot_svg(const std::string& title,
                               const std::vector<std::string>& indicator_names,
                               const std::vector<BoxStats>& boxes) {
  if (indicator_names.empty() || indicator_names.size() != boxes.size()) {
    throw UsageError("render_boxplot_svg: indicator names and boxes must align");
  }
  const std::size_t n = boxes.size();

  double axis_max = 0.0;
  for (const BoxStats& b : boxes) axis_max = std::max(axis_max, b.max);
  if (axis_max <= 0.0) axis_max = 1.0;

  const double width = kMarginLeft + kSlotWidth * static_cast<double>(n) + kMarginRight;
  const double height = kMarginTop + kPlotHeight + kMarginBottom;
  const double plot_top = kMarginTop;
  const double plot_bottom = kMarginTop + kPlotHeight;
  const auto y_of = [&](double v) { return plot_bottom - (v / axis_max) * kPlotHeight; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\"" + attr("width", width) +
         attr("height", height) +
         attr("viewBox", "0 0 " + format_double(width) + " " + format_double(height)) +
         attr("data-axis-max", axis_max) + attr("data-plot-top", plot_top) +
         attr("data-plot-bottom", plot_bottom) + ">\n";
  svg += "  <title>" + xml_escape(title) + "</title>\n";
  svg += "  <text" + attr("x", width / 2.0) + attr("y", kMarginTop / 2.0) +
         " text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         xml_escape(title) + "</text>\n";
  svg += "  <rect class=\"frame\"" + attr("x", kMarginLeft) + attr("y", plot_top) +
         attr("width", kSlotWidth * static_cast<double>(n)) + attr("height", kPlotHeight) +
         " fill=\"none\" stroke=\"black\"/>\n";

  // value axis ticks
  for (int t = 0; t <= 4; ++t) {
    const double v = axis_max * static_cast<double>(t) / 4.0;
    const double y = y_of(v);
    svg += line("tick", kMarginLeft - 6.0, y, kMarginLeft, y);
    svg += "  <text class=\"tick-label\"" + attr("x", kMarginLeft - 10.0) + attr("y", y + 4.0) +
           " text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           format_double(v) + "</text>\n";
  }

  for (std::size_t i = 0; i < n; ++i) {
    const BoxStats& b = boxes[i];
    const double cx = kMarginLeft + kSlotWidth * (static_cast<double>(i) + 0.5);
    const double left = cx - kBoxWidth / 2.0;

    svg += " <g class=\"box-group\"" + attr("data-indicator", xml_escape(indicator_names[i])) +
           ">\n";
    svg += line("whisker-low", cx, y_of(b.min), cx, y_of(b.q1));
    svg += line("whisker-high", cx, y_of(b.q3), cx, y_of(b.max));
    svg += line("cap-low", left, y_of(b.min), left + kBoxWidth, y_of(b.min));
    svg += line("cap-high", left, y_of(b.max), left + kBoxWidth, y_of(b.max));
    svg += "  <rect class=\"box\"" + attr("x", left) + attr("y", y_of(b.q3)) +
           attr("width", kBoxWidth) + attr("height", y_of(b.q1) - y_of(b.q3)) +
           " fill=\"#cfe2f3\" stroke=\"black\"/>\n";
    svg += line("median", left, y_of(b.median), left + kBoxWidth, y_of(b.median));
    svg += "  <circle class=\"mean\"" + attr("cx", cx) + attr("cy", y_of(b.mean)) +
           " r=\"3\" fill=\"black\"/>\n";
    svg += "  <text class=\"x-label\"" + attr("x", cx) + attr("y", plot_bottom + 20.0) +
           " text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           xml_escape(indicator_names[i]) + "</text>\n";
    svg += " </g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace indexforge
