#pragma once

#include <span>
#include <string>
#include <vector>

namespace oligosim {

struct Series {
  std::string label;
  std::vector<double> values;  // one point per interval, plotted against t
};

// Self-contained SVG line chart: axes, ticks, legend, and one <polyline>
// per series (and nothing else uses <polyline>, so counting them counts the
// series). Deterministic bytes: coordinates go through the same 9-digit
// formatter as the data files.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              std::span<const Series> series);

}  // namespace oligosim
