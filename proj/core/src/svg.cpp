#include "conespan/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <utility>

namespace conespan {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(std::span<const Point> points,
                       std::span<const DirectedEdge> edges,
                       const RenderOptions& options) {
  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  if (!points.empty()) {
    min_x = max_x = points.front().x;
    min_y = max_y = points.front().y;
    for (const auto& p : points) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double inner = options.width - 2.0 * options.margin;
  const double scale = inner / span;
  const double height = (max_y - min_y) * scale + 2.0 * options.margin;
  // SVG y grows downwards.
  auto sx = [&](double x) { return options.margin + (x - min_x) * scale; };
  auto sy = [&](double y) { return height - options.margin - (y - min_y) * scale; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         num(options.width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(options.width) + " " + num(height) + "\">\n";
  if (!options.title.empty()) {
    out += "<title>" + escape(options.title) + "</title>\n";
  }
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::set<std::pair<int, int>> undirected;
  for (const auto& e : edges) {
    undirected.insert({std::min(e.tail, e.head), std::max(e.tail, e.head)});
  }
  out += "<g stroke=\"#4a6fa5\" stroke-width=\"" + num(options.stroke_width) +
         "\" fill=\"none\">\n";
  for (const auto& [a, b] : undirected) {
    const Point& p = points[static_cast<std::size_t>(a)];
    const Point& q = points[static_cast<std::size_t>(b)];
    out += "<line x1=\"" + num(sx(p.x)) + "\" y1=\"" + num(sy(p.y)) +
           "\" x2=\"" + num(sx(q.x)) + "\" y2=\"" + num(sy(q.y)) + "\"/>\n";
  }
  out += "</g>\n";

  if (options.highlight_path.size() >= 2) {
    out += "<polyline stroke=\"#d62728\" stroke-width=\"" +
           num(3.0 * options.stroke_width) + "\" fill=\"none\" points=\"";
    bool first = true;
    for (const int v : options.highlight_path) {
      const Point& p = points[static_cast<std::size_t>(v)];
      if (!first) out += ' ';
      out += num(sx(p.x)) + "," + num(sy(p.y));
      first = false;
    }
    out += "\"/>\n";
  }

  out += "<g fill=\"#222222\">\n";
  for (const auto& p : points) {
    out += "<circle cx=\"" + num(sx(p.x)) + "\" cy=\"" + num(sy(p.y)) +
           "\" r=\"" + num(options.point_radius) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace conespan
