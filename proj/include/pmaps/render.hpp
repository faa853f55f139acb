#pragma once

#include <string>
#include <vector>

#include "pmaps/map_core.hpp"

namespace pmaps {

struct Point {
  double x = 0, y = 0;
};

// Barycentric embedding: outer face vertices on a regular polygon, every other
// vertex at the average of its neighbours.
std::vector<Point> tutte_layout(const PlanarMap& m, int iterations = 2000);

struct RenderOptions {
  double size = 480;
  bool labels = false;
};
std::string render_svg(const PlanarMap& m, const RenderOptions& opt = {});

}  // namespace pmaps
