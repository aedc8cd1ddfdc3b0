#pragma once

#include <string>
#include <vector>

#include "qfrenet/types.hpp"

namespace qfrenet {

struct Series {
  std::string name;
  std::string color;
  std::vector<double> x;
  std::vector<double> y;
};

// Self-contained line chart (no external assets); NaN samples break the line.
std::string line_chart_svg(const std::string& title, const std::vector<Series>& series);

// Orthographic projection of the Bloch sphere onto the x-z plane with the
// orbit polyline; start and end points marked.
std::string bloch_orbit_svg(const std::string& title, const std::vector<Vec3>& orbit);

}  // namespace qfrenet
