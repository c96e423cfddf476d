#include "glyphgraph/renderer.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "glyphgraph/errors.hpp"
#include "glyphgraph/io.hpp"

namespace glyphgraph {

namespace {

std::string fixed6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string to_svg(const Graph& g, const RenderStyle& style) {
  if (g.lines().empty()) {
    throw UsageError("to_svg: nothing to draw");
  }
  if (!g.fully_resolved()) {
    throw UsageError("to_svg: graph coordinates are not resolved");
  }
  if (style.stroke_width <= 0.0 || style.margin < 0.0) {
    throw UsageError("to_svg: invalid style");
  }

  const auto place = [&](NodeId n) {
    Point p = *g.coord(n);
    if (style.y_flip) p.y = -p.y;
    return p;
  };

  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x, max_x = -min_x, max_y = -min_x;
  for (NodeId n : g.nodes()) {
    const Point p = place(n);
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  min_x -= style.margin;
  min_y -= style.margin;
  max_x += style.margin;
  max_y += style.margin;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
  if (style.canvas) {
    out += " width=\"" + format_number(style.canvas->first) + "\" height=\"" +
           format_number(style.canvas->second) + "\"";
  }
  out += " viewBox=\"" + fixed6(min_x) + " " + fixed6(min_y) + " " +
         fixed6(max_x - min_x) + " " + fixed6(max_y - min_y) + "\">\n";
  out += "  <g stroke=\"#000000\" stroke-width=\"" +
         format_number(style.stroke_width) +
         "\" stroke-linecap=\"round\" fill=\"none\">\n";
  for (const auto& line : g.lines()) {
    const Point a = place(line.start);
    const Point b = place(line.end);
    out += "    <line x1=\"" + fixed6(a.x) + "\" y1=\"" + fixed6(a.y) +
           "\" x2=\"" + fixed6(b.x) + "\" y2=\"" + fixed6(b.y) + "\"/>\n";
  }
  out += "  </g>\n</svg>\n";
  return out;
}

}  // namespace glyphgraph
