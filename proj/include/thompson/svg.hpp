#pragma once

// Static SVG drawings of link diagrams that carry a layout. Arcs are cubic curves leaving
// each crossing along its slot direction; arcs marked on the x-axis pass vertically
// through their axis point. Under strands stop short of the crossing centre, over strands
// run through it. Oriented diagrams get an arrowhead at the end of every arc.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "thompson/link_diagram.hpp"

namespace thompson {

namespace detail {

struct Point {
  double x;
  double y;
};

inline std::string svg_number(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", v);
  return buffer;
}

inline std::string svg_point(Point p) { return svg_number(p.x) + "," + svg_number(p.y); }

}  // namespace detail

inline std::string render_svg(const LinkDiagram& l) {
  using detail::Point;
  constexpr double kScale = 60.0;
  constexpr double kArm = 0.22;
  constexpr double kPull = 0.6;
  if (l.crossing_count() > 0 && !l.layout()) throw RangeError("diagram has no layout to draw");

  auto angle = [&](Dart d) {
    return (l.layout()->slot0_angle[static_cast<std::size_t>(d.crossing)] + 90.0 * d.slot) * std::numbers::pi / 180.0;
  };
  auto centre = [&](int c) {
    const auto& p = l.layout()->centre[static_cast<std::size_t>(c)];
    return Point{p[0], p[1]};
  };
  auto along = [&](Dart d, double r) {
    const Point c = centre(d.crossing);
    return Point{c.x + r * std::cos(angle(d)), c.y + r * std::sin(angle(d))};
  };

  // Bounding box in diagram coordinates.
  double min_x = 0;
  double max_x = 1;
  double min_y = -1;
  double max_y = 1;
  if (l.layout()) {
    for (const auto& p : l.layout()->centre) {
      min_x = std::min(min_x, p[0]);
      max_x = std::max(max_x, p[0]);
      min_y = std::min(min_y, p[1]);
      max_y = std::max(max_y, p[1]);
    }
  }
  const double root_x = min_x - 1.5;
  min_x = root_x - 0.5;
  const double loops_x = max_x + 1.5;
  max_x = loops_x + 2.0 * l.free_loops();
  min_y -= 1.0;
  max_y += 1.0;
  auto screen = [&](Point p) { return Point{(p.x - min_x) * kScale, (max_y - p.y) * kScale}; };

  std::string body;
  for (int a = 0; a < l.arc_count(); ++a) {
    const auto& ends = l.ends(a);
    Dart from = ends[0];
    Dart to = ends[1];
    if (l.oriented() && l.tails()[static_cast<std::size_t>(a)] != from) std::swap(from, to);
    auto arm = [&](Dart d) { return d.slot % 2 == 0 ? kArm : 0.0; };
    const Point p0 = along(from, arm(from));
    const Point p3 = along(to, arm(to));
    const Point c0 = along(from, kPull + 0.3);
    const Point c3 = along(to, kPull + 0.3);
    std::string path = "M " + detail::svg_point(screen(p0));
    std::optional<AxisMark> mark;
    if (l.has_axis()) mark = l.axis_marks()[static_cast<std::size_t>(a)];
    if (mark) {
      const double x = mark->position < 0 ? root_x : mark->position;
      const double dir = mark->upper == from ? -1.0 : 1.0;  // vertical direction of travel
      const Point m{x, 0.0};
      const Point m_in{x, -dir * 0.5};
      const Point m_out{x, dir * 0.5};
      path += " C " + detail::svg_point(screen(c0)) + " " + detail::svg_point(screen(m_in)) + " " + detail::svg_point(screen(m));
      path += " C " + detail::svg_point(screen(m_out)) + " " + detail::svg_point(screen(c3)) + " " + detail::svg_point(screen(p3));
    } else {
      path += " C " + detail::svg_point(screen(c0)) + " " + detail::svg_point(screen(c3)) + " " + detail::svg_point(screen(p3));
    }
    body += "  <path d=\"" + path + "\"" + (l.oriented() ? " marker-end=\"url(#arrow)\"" : "") + "/>\n";
  }
  for (int i = 0; i < l.free_loops(); ++i) {
    const Point p = screen(Point{loops_x + 2.0 * i, 0.0});
    body += "  <circle cx=\"" + detail::svg_number(p.x) + "\" cy=\"" + detail::svg_number(p.y) + "\" r=\"" +
            detail::svg_number(0.7 * kScale) + "\"/>\n";
  }

  const double width = (max_x - min_x) * kScale;
  const double height = (max_y - min_y) * kScale;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::svg_number(width) +
         "\" height=\"" + detail::svg_number(height) + "\" viewBox=\"0 0 " + detail::svg_number(width) + " " +
         detail::svg_number(height) + "\">\n";
  if (l.oriented()) {
    out += "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  }
  out += "  <g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  out += body;
  out += "  </g>\n</svg>\n";
  return out;
}

}  // namespace thompson
