#pragma once

#include <string>
#include <vector>

#include "yaoconn/graphs.hpp"
#include "yaoconn/point_set.hpp"

namespace yaoconn {

// One set of edges drawn in a single stroke style. Layers are rendered in
// the order given, so later layers paint on top of earlier ones.
struct EdgeLayer {
  std::vector<GeomEdge> edges;
};

// Renders points (and optional labels) plus edge layers as a standalone SVG
// document. Coordinates are mapped, aspect-preserved, onto a fixed 800x800
// canvas with a 5% margin; output bytes are deterministic for identical
// input. Throws std::invalid_argument if an edge addresses a node out of
// range or stores a length that differs from the endpoint distance by more
// than 1e-12.
std::string render_svg(const PointSet& points, const std::vector<EdgeLayer>& layers,
                       bool draw_labels = false);

}  // namespace yaoconn
