#pragma once

#include <span>
#include <string>
#include <vector>

#include "conespan/graph_build.hpp"

namespace conespan {

struct RenderOptions {
  double width = 800.0;
  double margin = 20.0;
  double point_radius = 2.5;
  double stroke_width = 0.8;
  /// Vertex sequence drawn as a highlighted polyline (e.g. a stretch witness).
  std::vector<int> highlight_path;
  std::string title;
};

/// One circle per point, one line per undirected edge, and an optional
/// highlighted path. Numbers are printed with fixed precision, so equal input
/// gives byte-identical output.
std::string render_svg(std::span<const Point> points,
                       std::span<const DirectedEdge> edges,
                       const RenderOptions& options = {});

}  // namespace conespan
