#ifndef GLYPHGRAPH_RENDERER_HPP
#define GLYPHGRAPH_RENDERER_HPP

#include <optional>
#include <string>
#include <utility>

#include "glyphgraph/graph.hpp"

namespace glyphgraph {

struct RenderStyle {
  double stroke_width = 0.05;
  double margin = 0.5;
  std::optional<std::pair<double, double>> canvas;  // width, height attrs
  bool y_flip = true;  // map mathematical y-up onto screen y-down
};

// Renders a fully resolved graph as an SVG 1.1 document: one line element
// per segment, viewBox = bounding box of all nodes expanded by the margin,
// stroke black, fill none, coordinates with 6 decimal places. Byte
// deterministic. Throws UsageError on unresolved coordinates or an empty
// graph.
std::string to_svg(const Graph& g, const RenderStyle& style = {});

}  // namespace glyphgraph

#endif  // GLYPHGRAPH_RENDERER_HPP
