#pragma once

#include <string>

#include "okp/tree_decomposition.hpp"
#include "okp/triangulation.hpp"

namespace okp {

// 600x600 SVG of the convex drawing: vertices on a radius-270 circle,
// counterclockwise from the positive x axis, edges as chords. When a
// triangulation is given, its inner links are drawn dashed on top.
std::string render_drawing_svg(const ConvexDrawing& d,
                               const Triangulation* t = nullptr);

// Graphviz DOT of the bag tree; node labels list the bag contents.
std::string render_td_dot(const TreeDecomposition& td);

}  // namespace okp
