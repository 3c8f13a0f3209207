#include "polyaxis/svg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "polyaxis/dihedral.hpp"

namespace polyaxis {

namespace {

// SVG's y axis points down; flip it so "counterclockwise" reads as usual.
struct Frame {
  double center;
  double radius;

  std::pair<double, double> at_angle(double theta) const {
    return {center + radius * std::cos(theta),
            center - radius * std::sin(theta)};
  }
};

double round3(double v) {
  double r = std::round(v * 1000.0) / 1000.0;
  return r == 0.0 ? 0.0 : r;  // avoid "-0"
}

std::string num(double v) {
  std::ostringstream out;
  out << round3(v);
  return out.str();
}

void emit_line(std::ostringstream& out, const char* cls,
               std::pair<double, double> a, std::pair<double, double> b,
               const std::string& color, double width) {
  out << "  <line class=\"" << cls << "\" x1=\"" << num(a.first) << "\" y1=\""
      << num(a.second) << "\" x2=\"" << num(b.first) << "\" y2=\""
      << num(b.second) << "\" stroke=\"" << color << "\" stroke-width=\""
      << num(width) << "\"/>\n";
}

}  // namespace

std::string render_svg(const VertexCycle& c, const RenderOptions& opts) {
  if (opts.size <= 0) throw std::invalid_argument("render size must be > 0");

  const int n = c.n;
  const Frame frame{opts.size / 2.0, opts.size * 0.42};
  const double step = 2.0 * std::numbers::pi / n;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size
      << "\" height=\"" << opts.size << "\" viewBox=\"0 0 " << opts.size << ' '
      << opts.size << "\">\n";

  if (opts.show_axes) {
    // Reflection j fixes the directions at angle pi*j/n and its antipode.
    const ChordSet figure = chord_set(c);
    const Frame axis_frame{frame.center, frame.radius * 1.08};
    for (int j = 0; j < n; ++j) {
      if (!(act(DihedralElement::reflection(j), figure) == figure)) continue;
      double theta = std::numbers::pi * j / n;
      emit_line(out, "axis", axis_frame.at_angle(theta),
                axis_frame.at_angle(theta + std::numbers::pi), opts.axis_color,
                opts.axis_width);
    }
  }

  for (int i = 0; i < n; ++i) {
    int p = c.order[i];
    int q = c.order[(i + 1) % n];
    emit_line(out, "edge", frame.at_angle(step * p), frame.at_angle(step * q),
              opts.edge_color, opts.edge_width);
  }

  for (int k = 0; k < n; ++k) {
    auto [x, y] = frame.at_angle(step * k);
    out << "  <circle class=\"vertex\" cx=\"" << num(x) << "\" cy=\"" << num(y)
        << "\" r=\"" << num(opts.size / 160.0) << "\" fill=\"#333333\"/>\n";
    if (opts.show_vertex_labels) {
      Frame label_frame{frame.center, frame.radius * 1.12};
      auto [lx, ly] = label_frame.at_angle(step * k);
      out << "  <text class=\"label\" x=\"" << num(lx) << "\" y=\"" << num(ly)
          << "\" font-size=\"" << opts.size / 32
          << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << k
          << "</text>\n";
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace polyaxis
