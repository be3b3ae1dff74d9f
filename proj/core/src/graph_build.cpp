#include "conespan/graph_build.hpp"

#include <algorithm>
#include <stdexcept>

namespace conespan {
namespace {

struct Polar {
  double dist;
  Angle phi;
};

std::vector<Polar> polar_from(std::span<const Point> points, int u) {
  std::vector<Polar> out(points.size());
  for (std::size_t w = 0; w < points.size(); ++w) {
    if (static_cast<int>(w) == u) continue;
    out[w] = {distance(points[u], points[w]), polar_angle(points[u], points[w])};
  }
  return out;
}

void require_k(int k, int min_k) {
  if (k < min_k) {
    throw PreconditionError("parameter k = " + std::to_string(k) +
                            " is below the minimum " + std::to_string(min_k));
  }
}

std::vector<Point> owned(std::span<const Point> points) {
  validate_points(points);
  return {points.begin(), points.end()};
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::yao: return "yao";
    case Family::yao_yao: return "yy";
    case Family::overlapping_yao: return "oy";
    case Family::trapezoidal_yao: return "ty";
  }
  return "yao";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "yao" || name == "y") return Family::yao;
  if (name == "yy" || name == "yao_yao") return Family::yao_yao;
  if (name == "oy" || name == "overlapping_yao") return Family::overlapping_yao;
  if (name == "ty" || name == "trapezoidal_yao") return Family::trapezoidal_yao;
  return std::nullopt;
}

ConeGraph::ConeGraph(std::vector<Point> points, int k, Family family,
                     std::vector<DirectedEdge> edges)
    : points_(std::move(points)), k_(k), family_(family),
      edges_(std::move(edges)) {
  const int n = size();
  for (auto& e : edges_) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      throw PreconditionError("edge index out of range: " +
                              std::to_string(e.tail) + "->" +
                              std::to_string(e.head));
    }
    if (e.tail == e.head) {
      throw PreconditionError("self-loop at vertex " + std::to_string(e.tail));
    }
    e.length = distance(points_[e.tail], points_[e.head]);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges_) ++offsets_[static_cast<std::size_t>(e.tail) + 1];
  for (int i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
}

std::span<const DirectedEdge> ConeGraph::out_edges(int tail) const {
  if (tail < 0 || tail >= size()) {
    throw PreconditionError("vertex index out of range");
  }
  return std::span<const DirectedEdge>(edges_).subspan(
      offsets_[tail], offsets_[tail + 1] - offsets_[tail]);
}

bool ConeGraph::contains(int tail, int head) const {
  if (tail < 0 || tail >= size()) return false;
  const auto out = out_edges(tail);
  return std::binary_search(out.begin(), out.end(),
                            DirectedEdge{tail, head, 0.0});
}

ConeGraph ConeGraph::without_edge(int tail, int head) const {
  std::vector<DirectedEdge> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (!(e.tail == tail && e.head == head)) kept.push_back(e);
  }
  return ConeGraph(points_, k_, family_, std::move(kept));
}

void validate_points(std::span<const Point> points) {
  std::vector<std::pair<double, double>> sorted;
  sorted.reserve(points.size());
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw PreconditionError("point coordinates must be finite");
    }
    sorted.emplace_back(p.x, p.y);
  }
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw PreconditionError("duplicate point (" + std::to_string(dup->first) +
                            ", " + std::to_string(dup->second) + ")");
  }
}

ConeGraph build_yao(std::span<const Point> points, int k) {
  require_k(k, 1);
  auto pts = owned(points);
  const int n = static_cast<int>(pts.size());
  std::vector<DirectedEdge> edges;
  std::vector<std::optional<Candidate>> best(k);
  for (int u = 0; u < n; ++u) {
    std::fill(best.begin(), best.end(), std::nullopt);
    for (int w = 0; w < n; ++w) {
      if (w == u) continue;
      const Angle phi = polar_angle(pts[u], pts[w]);
      const Candidate c{distance(pts[u], pts[w]), phi.radians(), w};
      auto& slot = best[cone_index(k, phi)];
      if (!slot || c < *slot) slot = c;
    }
    for (const auto& slot : best) {
      if (slot) edges.push_back({u, slot->index, slot->key});
    }
  }
  return ConeGraph(std::move(pts), k, Family::yao, std::move(edges));
}

ConeGraph build_yao_yao(std::span<const Point> points, int k) {
  const ConeGraph yao = build_yao(points, k);
  const auto& pts = yao.points();
  const int n = yao.size();
  // Reverse step: at each head u, among incoming Yao edges v->u with v in
  // cone j of u, keep the least candidate.
  std::vector<std::optional<Candidate>> best(static_cast<std::size_t>(n) * k);
  for (const auto& e : yao.edges()) {
    const int u = e.head;
    const int v = e.tail;
    const Angle phi = polar_angle(pts[u], pts[v]);
    const Candidate c{distance(pts[u], pts[v]), phi.radians(), v};
    auto& slot = best[static_cast<std::size_t>(u) * k + cone_index(k, phi)];
    if (!slot || c < *slot) slot = c;
  }
  std::vector<DirectedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int j = 0; j < k; ++j) {
      const auto& slot = best[static_cast<std::size_t>(u) * k + j];
      if (slot) edges.push_back({slot->index, u, slot->key});
    }
  }
  return ConeGraph(pts, k, Family::yao_yao, std::move(edges));
}

ConeGraph build_oy(std::span<const Point> points, int k) {
  require_k(k, 1);
  auto pts = owned(points);
  const int n = static_cast<int>(pts.size());
  const int span = gamma_span(k);
  std::vector<DirectedEdge> edges;
  std::vector<std::optional<Candidate>> best(k);
  for (int u = 0; u < n; ++u) {
    std::fill(best.begin(), best.end(), std::nullopt);
    for (int w = 0; w < n; ++w) {
      if (w == u) continue;
      const Angle phi = polar_angle(pts[u], pts[w]);
      const Candidate c{distance(pts[u], pts[w]), phi.radians(), w};
      const int cone = cone_index(k, phi);
      // Widened cone j covers uniform cones j, j+1, ..., j+span-1.
      for (int t = 0; t < span; ++t) {
        auto& slot = best[(cone - t + k) % k];
        if (!slot || c < *slot) slot = c;
      }
    }
    for (const auto& slot : best) {
      if (slot) edges.push_back({u, slot->index, slot->key});
    }
  }
  return ConeGraph(std::move(pts), k, Family::overlapping_yao,
                   std::move(edges));
}

TrapezoidFrame ty_frame(Point apex, int k, int j, bool reflected) {
  return TrapezoidFrame(apex, Angle(cone_lower(j, k)), reflected, theta(k));
}

std::vector<TySelection> ty_selections(std::span<const Point> points, int k) {
  require_k(k, 25);
  validate_points(points);
  const int n = static_cast<int>(points.size());
  std::vector<TySelection> out;
  for (int u = 0; u < n; ++u) {
    const auto polar = polar_from(points, u);
    for (int j = 0; j < k; ++j) {
      for (const bool reflected : {false, true}) {
        const TrapezoidFrame frame = ty_frame(points[u], k, j, reflected);
        std::optional<Candidate> best;
        HitPart best_part = HitPart::none;
        for (int w = 0; w < n; ++w) {
          if (w == u) continue;
          const HitResult hit =
              scale_to_hit_polar(frame, polar[w].dist, polar[w].phi);
          if (hit.part == HitPart::none) continue;
          const Candidate c{hit.lambda, polar[w].phi.radians(), w};
          if (!best || c < *best) {
            best = c;
            best_part = hit.part;
          }
        }
        if (best && best_part == HitPart::critical_arc) {
          out.push_back({u, best->index, j, reflected});
        }
      }
    }
  }
  return out;
}

ConeGraph build_ty(std::span<const Point> points, int k) {
  require_k(k, 25);
  auto pts = owned(points);
  std::vector<DirectedEdge> edges;
  for (const auto& s : ty_selections(pts, k)) {
    edges.push_back({s.tail, s.head, 0.0});
  }
  return ConeGraph(std::move(pts), k, Family::trapezoidal_yao,
                   std::move(edges));
}

ConeGraph build_graph(Family family, std::span<const Point> points, int k) {
  switch (family) {
    case Family::yao: return build_yao(points, k);
    case Family::yao_yao: return build_yao_yao(points, k);
    case Family::overlapping_yao: return build_oy(points, k);
    case Family::trapezoidal_yao: return build_ty(points, k);
  }
  throw std::logic_error("unknown family");
}

}  // namespace conespan
