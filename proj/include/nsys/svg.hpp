#pragma once

#include <string>
#include <vector>

#include "nsys/minima.hpp"
#include "nsys/plmap.hpp"

namespace nsys {

struct SvgOptions {
  int width = 800;
  int height = 480;
  bool guides = true;         // dashed verticals at breakpoints
  bool slope_labels = false;  // per-segment slope of the rising components
};

// Both renderers are deterministic: the same input yields identical bytes.
std::string render_svg(const PLMap& P, const SvgOptions& opt = {});
std::string render_trajectory_svg(const std::vector<TrajectoryPoint>& trajectory,
                                  const SvgOptions& opt = {});

}  // namespace nsys
