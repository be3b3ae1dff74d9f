#include "conespan/generate.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "conespan/random.hpp"

namespace conespan {
namespace {

class DistinctSink {
 public:
  bool add(Point p) {
    if (!seen_.insert({p.x, p.y}).second) return false;
    points_.push_back(p);
    return true;
  }
  std::vector<Point> take() { return std::move(points_); }

 private:
  std::set<std::pair<double, double>> seen_;
  std::vector<Point> points_;
};

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(std::string("invalid generator parameter: ") + what);
}

}  // namespace

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::uniform_square: return "uniform";
    case GenKind::grid: return "grid";
    case GenKind::co_circular: return "circle";
    case GenKind::clustered: return "clustered";
  }
  return "uniform";
}

std::optional<GenKind> parse_gen_kind(std::string_view name) {
  if (name == "uniform" || name == "uniform_square") return GenKind::uniform_square;
  if (name == "grid") return GenKind::grid;
  if (name == "circle" || name == "co_circular") return GenKind::co_circular;
  if (name == "clustered") return GenKind::clustered;
  return std::nullopt;
}

std::vector<Point> gen_points(const GenSpec& spec) {
  require(spec.n >= 1, "n >= 1");
  Rng rng(spec.seed);
  DistinctSink sink;
  const int n = spec.n;

  switch (spec.kind) {
    case GenKind::uniform_square: {
      require(spec.side > 0.0 && std::isfinite(spec.side), "side > 0");
      for (int i = 0; i < n;) {
        const double x = spec.side * uniform01(rng);
        const double y = spec.side * uniform01(rng);
        if (sink.add({x, y})) ++i;
      }
      break;
    }
    case GenKind::grid: {
      require(spec.pitch > 0.0 && std::isfinite(spec.pitch), "pitch > 0");
      const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
      for (int i = 0; i < n; ++i) {
        sink.add({spec.pitch * (i % cols), spec.pitch * (i / cols)});
      }
      break;
    }
    case GenKind::co_circular: {
      require(spec.radius > 0.0 && std::isfinite(spec.radius), "radius > 0");
      require(spec.jitter >= 0.0 && spec.jitter < 1.0, "jitter in [0, 1)");
      const double step = kTwoPi / n;
      for (int i = 0; i < n;) {
        const double jit = spec.jitter == 0.0 ? 0.0 : spec.jitter * (uniform01(rng) - 0.5);
        const double a = step * (i + jit);
        if (sink.add({spec.radius * std::cos(a), spec.radius * std::sin(a)})) ++i;
      }
      break;
    }
    case GenKind::clustered: {
      require(spec.clusters >= 1, "clusters >= 1");
      require(spec.spread > 0.0 && std::isfinite(spec.spread), "spread > 0");
      require(spec.side > 0.0 && std::isfinite(spec.side), "side > 0");
      std::vector<Point> centers;
      for (int c = 0; c < spec.clusters; ++c) {
        const double x = spec.side * uniform01(rng);
        const double y = spec.side * uniform01(rng);
        centers.push_back({x, y});
      }
      for (int i = 0; i < n;) {
        const Point& c = centers[static_cast<std::size_t>(i % spec.clusters)];
        const double dx = spec.spread * standard_normal(rng);
        const double dy = spec.spread * standard_normal(rng);
        if (sink.add({c.x + dx, c.y + dy})) ++i;
      }
      break;
    }
  }
  return sink.take();
}

}  // namespace conespan
