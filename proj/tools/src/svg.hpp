#pragma once

#include <string>
#include <vector>

namespace rqit::cli {

struct Series {
  std::string label;
  std::vector<double> y;
};

// Minimal line plot: one polyline per series over shared x values, with axis
// extents printed at the corners.
std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::vector<double>& x, const std::vector<Series>& series);

}  // namespace rqit::cli
