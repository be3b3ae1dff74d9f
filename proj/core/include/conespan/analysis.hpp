#pragma once

// Stretch measurement, degree and connectivity audits, closed-form spanner
// bounds, and a brute-force stretch oracle for small inputs.
//
// Paths are measured on the undirected support of the directed edge set.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "conespan/graph_build.hpp"

namespace conespan {

/// Single-source shortest path lengths over the undirected support, with
/// Euclidean edge weights. Unreachable vertices get +infinity.
std::vector<double> shortest_paths(const ConeGraph& graph, int source);

/// Vertex sequence of one shortest source->target path (empty if none).
std::vector<int> shortest_path_vertices(const ConeGraph& graph, int source,
                                        int target);

struct DegreeStats {
  int max_degree = 0;
  /// histogram[d] = number of vertices with undirected degree d.
  std::vector<int> histogram;
};

DegreeStats degree_stats(const ConeGraph& graph);

bool is_connected(const ConeGraph& graph);

struct SpannerReport {
  /// max over pairs of d_G(u,v) / |uv|; +infinity when disconnected.
  double stretch = 1.0;
  std::pair<int, int> witness{-1, -1};
  int max_degree = 0;
  bool connected = true;
  std::optional<double> bound;
  std::optional<bool> bound_satisfied;
};

/// Requires at least two points. If `bound` is given the report records
/// whether stretch <= bound * (1 + tolerance).
SpannerReport stretch_factor(const ConeGraph& graph,
                             std::optional<double> bound = std::nullopt,
                             double tolerance = kRelTol);

/// Stretch by Floyd-Warshall relaxation; independent of shortest_paths.
/// Requires n <= 12.
double brute_force_stretch(std::span<const Point> points,
                           std::span<const DirectedEdge> edges);

/// Overlapping / trapezoidal Yao stretch bound (1 - 2 sin(pi/k + pi/8))^-1.
/// Requires k > 24.
double tau_bound(int k);

/// Edge-to-path factor for Yao-Yao over trapezoidal Yao: the larger of
///   ((1 - (2 tau_2k + 1) tan(pi/k)) cos(theta_2k + pi/k))^-1 and
///   (1 - 2 tau_2k sin(pi/(2k)))^-1.
/// Requires k >= 42.
double tau_prime_bound(int k);

struct BoundTable {
  int k = 0;
  double tau_k = 0.0;
  double tau_2k = 0.0;
  double theta_2k = 0.0;
  double tau_prime_k = 0.0;
  /// Stretch bound for YY_{2k}: tau_prime_k * tau_2k.
  double t_k = 0.0;
};

/// Requires k >= 42.
BoundTable t_bound(int k);

/// Limit of t_bound(k).t_k as k grows: sqrt(2) / (1 - 2 sin(pi/8)).
double t_bound_limit();

/// |uw| / (|uv| - tau |vw|). Requires tau >= 1, tau |vw| < |uv| and both
/// angles wuv, wvu in [0, pi/2); an angle at a coincident corner counts as 0.
double ratio_oracle(Point u, Point v, Point w, double tau);

/// (1 - 2 sin(alpha/2))^-1, the sector bound for the tau = 1 ratio.
/// Requires alpha in [0, pi/3).
double sector_ratio_bound(double alpha);

struct SectorRatioSample {
  double max_ratio = 0.0;
  Point argmax;
};

/// Largest tau = 1 ratio |uw| / (|uv| - |vw|) over `n_samples` uniform points w
/// of the closed sector of radius 1 at u = (0,0) spanning directions
/// [-alpha, alpha], with v = (1,0). Requires alpha in (0, pi/3).
SectorRatioSample sample_sector_ratio(double alpha, std::size_t n_samples,
                                      std::uint64_t seed);

struct SubgraphCheck {
  bool ok = true;
  std::vector<DirectedEdge> violations;
};

/// Every directed edge of `inner` must be an edge of `outer`. Throws
/// PreconditionError if the point sequences differ.
SubgraphCheck subgraph_check(const ConeGraph& inner, const ConeGraph& outer);

}  // namespace conespan
