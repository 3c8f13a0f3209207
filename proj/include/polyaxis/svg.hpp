#pragma once

#include <string>

#include "polyaxis/polygon.hpp"

// SVG drawings of n-polygons: vertices on a circle (vertex 0 at angle 0,
// counterclockwise positive), one line per edge, and optionally one axis
// line per fixing reflection. The only floating point in the project lives
// here; coordinates are rounded to 3 decimals so output is byte-stable.

namespace polyaxis {

struct RenderOptions {
  int size = 480;  // square canvas, pixels
  bool show_axes = false;
  bool show_vertex_labels = false;
  std::string edge_color = "#1a3a6e";
  std::string axis_color = "#c0392b";
  double edge_width = 1.6;
  double axis_width = 0.8;
};

std::string render_svg(const VertexCycle& c, const RenderOptions& opts);

}  // namespace polyaxis
