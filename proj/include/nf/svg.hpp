#pragma once

#include <string>
#include <vector>

namespace nf {

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

// Minimal SVG line plot on log-log axes (decade ticks). Points with
// non-positive coordinates are dropped.
void write_loglog_svg(const std::string& path, const std::string& title,
                      const std::string& xlabel, const std::string& ylabel,
                      const std::vector<PlotSeries>& series);

}  // namespace nf
