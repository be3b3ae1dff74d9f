#include "conespan/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "conespan/random.hpp"

namespace conespan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Arc {
  int to;
  double length;
};

std::vector<std::vector<Arc>> undirected_adjacency(const ConeGraph& graph) {
  std::vector<std::vector<Arc>> adj(graph.size());
  for (const auto& e : graph.edges()) {
    adj[e.tail].push_back({e.head, e.length});
    adj[e.head].push_back({e.tail, e.length});
  }
  return adj;
}

void dijkstra(const std::vector<std::vector<Arc>>& adj, int source,
              std::vector<double>& dist, std::vector<int>* parent) {
  dist.assign(adj.size(), kInf);
  if (parent) parent->assign(adj.size(), -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const Arc& a : adj[u]) {
      const double nd = d + a.length;
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        if (parent) (*parent)[a.to] = u;
        heap.push({nd, a.to});
      }
    }
  }
}

void require_source(const ConeGraph& graph, int v) {
  if (v < 0 || v >= graph.size()) {
    throw PreconditionError("vertex index out of range");
  }
}

long double tau_bound_ld(int k) {
  constexpr long double pi = std::numbers::pi_v<long double>;
  return 1.0L / (1.0L - 2.0L * std::sin(pi / k + pi / 8.0L));
}

// Angle at corner `at` between the rays to a and b; 0 if either is degenerate.
double corner_angle(Point at, Point a, Point b) {
  const Point da = a - at;
  const Point db = b - at;
  const double na = norm(da);
  const double nb = norm(db);
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double c = (da.x * db.x + da.y * db.y) / (na * nb);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

std::vector<double> shortest_paths(const ConeGraph& graph, int source) {
  require_source(graph, source);
  std::vector<double> dist;
  dijkstra(undirected_adjacency(graph), source, dist, nullptr);
  return dist;
}

std::vector<int> shortest_path_vertices(const ConeGraph& graph, int source,
                                        int target) {
  require_source(graph, source);
  require_source(graph, target);
  std::vector<double> dist;
  std::vector<int> parent;
  dijkstra(undirected_adjacency(graph), source, dist, &parent);
  if (!std::isfinite(dist[target])) return {};
  std::vector<int> path{target};
  while (path.back() != source) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

DegreeStats degree_stats(const ConeGraph& graph) {
  std::vector<int> degree(graph.size(), 0);
  // Undirected support: u->v and v->u count once.
  for (const auto& e : graph.edges()) {
    if (e.tail < e.head || !graph.contains(e.head, e.tail)) {
      ++degree[e.tail];
      ++degree[e.head];
    }
  }
  DegreeStats stats;
  for (const int d : degree) stats.max_degree = std::max(stats.max_degree, d);
  stats.histogram.assign(static_cast<std::size_t>(stats.max_degree) + 1, 0);
  for (const int d : degree) ++stats.histogram[d];
  return stats;
}

bool is_connected(const ConeGraph& graph) {
  const int n = graph.size();
  if (n <= 1) return true;
  const auto adj = undirected_adjacency(graph);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const Arc& a : adj[u]) {
      if (!seen[a.to]) {
        seen[a.to] = 1;
        ++count;
        stack.push_back(a.to);
      }
    }
  }
  return count == n;
}

SpannerReport stretch_factor(const ConeGraph& graph, std::optional<double> bound,
                             double tolerance) {
  const int n = graph.size();
  if (n < 2) throw PreconditionError("stretch factor needs at least 2 points");
  const auto adj = undirected_adjacency(graph);
  const auto& pts = graph.points();

  SpannerReport report;
  report.stretch = 1.0;
  report.witness = {0, 1};
  report.max_degree = degree_stats(graph).max_degree;
  std::vector<double> dist;
  bool have_witness = false;
  for (int u = 0; u < n && report.connected; ++u) {
    dijkstra(adj, u, dist, nullptr);
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      if (!std::isfinite(dist[v])) {
        report.connected = false;
        report.stretch = kInf;
        report.witness = {u, v};
        break;
      }
      const double ratio = dist[v] / distance(pts[u], pts[v]);
      if (!have_witness || ratio > report.stretch) {
        report.stretch = ratio;
        report.witness = {u, v};
        have_witness = true;
      }
    }
  }
  if (bound) {
    report.bound = bound;
    report.bound_satisfied = report.stretch <= *bound * (1.0 + tolerance);
  }
  return report;
}

double brute_force_stretch(std::span<const Point> points,
                           std::span<const DirectedEdge> edges) {
  const std::size_t n = points.size();
  if (n > 12) throw PreconditionError("brute-force stretch is limited to n <= 12");
  if (n < 2) throw PreconditionError("stretch factor needs at least 2 points");
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const auto& e : edges) {
    const auto a = static_cast<std::size_t>(e.tail);
    const auto b = static_cast<std::size_t>(e.head);
    if (a >= n || b >= n) throw PreconditionError("edge index out of range");
    const double len = distance(points[a], points[b]);
    d[a][b] = std::min(d[a][b], len);
    d[b][a] = std::min(d[b][a], len);
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
      }
    }
  }
  double worst = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      worst = std::max(worst, d[i][j] / distance(points[i], points[j]));
    }
  }
  return worst;
}

double tau_bound(int k) {
  if (k <= 24) {
    throw PreconditionError("tau bound needs k > 24, got k = " +
                            std::to_string(k));
  }
  return static_cast<double>(tau_bound_ld(k));
}

double tau_prime_bound(int k) {
  if (k < 42) {
    throw PreconditionError("tau' bound needs k >= 42, got k = " +
                            std::to_string(k));
  }
  // Near k = 42 the first denominator is ~0.023, so work in long double.
  constexpr long double pi = std::numbers::pi_v<long double>;
  const long double tau2k = tau_bound_ld(2 * k);
  const long double theta2k =
      2.0L * pi * static_cast<long double>(theta_span(2 * k)) / (2.0L * k);
  const long double d1 = (1.0L - (2.0L * tau2k + 1.0L) * std::tan(pi / k)) *
                         std::cos(theta2k + pi / k);
  const long double d2 = 1.0L - 2.0L * tau2k * std::sin(pi / (2.0L * k));
  if (!(d1 > 0.0L) || !(d2 > 0.0L)) {
    throw PreconditionError("tau' bound denominator is not positive");
  }
  return static_cast<double>(std::max(1.0L / d1, 1.0L / d2));
}

BoundTable t_bound(int k) {
  if (k < 42) {
    throw PreconditionError("t bound needs k >= 42, got k = " +
                            std::to_string(k));
  }
  BoundTable t;
  t.k = k;
  t.tau_k = tau_bound(k);
  t.tau_2k = tau_bound(2 * k);
  t.theta_2k = theta(2 * k);
  t.tau_prime_k = tau_prime_bound(k);
  t.t_k = t.tau_prime_k * t.tau_2k;
  return t;
}

double t_bound_limit() {
  constexpr long double pi = std::numbers::pi_v<long double>;
  return static_cast<double>(std::numbers::sqrt2_v<long double> /
                             (1.0L - 2.0L * std::sin(pi / 8.0L)));
}

double ratio_oracle(Point u, Point v, Point w, double tau) {
  if (!(tau >= 1.0)) throw PreconditionError("ratio oracle needs tau >= 1");
  const double uv = distance(u, v);
  const double vw = distance(v, w);
  if (!(tau * vw < uv)) {
    throw PreconditionError("ratio oracle needs tau*|vw| < |uv|");
  }
  if (!(corner_angle(u, w, v) < kPi / 2.0) ||
      !(corner_angle(v, w, u) < kPi / 2.0)) {
    throw PreconditionError("ratio oracle needs angles wuv, wvu < pi/2");
  }
  return distance(u, w) / (uv - tau * vw);
}

double sector_ratio_bound(double alpha) {
  if (!(alpha >= 0.0 && alpha < kPi / 3.0)) {
    throw PreconditionError("sector bound needs alpha in [0, pi/3)");
  }
  return 1.0 / (1.0 - 2.0 * std::sin(alpha / 2.0));
}

SectorRatioSample sample_sector_ratio(double alpha, std::size_t n_samples,
                                      std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha < kPi / 3.0)) {
    throw PreconditionError("sector sampling needs alpha in (0, pi/3)");
  }
  const Point u{0.0, 0.0};
  const Point v{1.0, 0.0};
  Rng rng(seed);
  SectorRatioSample out;
  std::size_t taken = 0;
  while (taken < n_samples) {
    const double r = std::sqrt(uniform01(rng));
    const double a = alpha * (2.0 * uniform01(rng) - 1.0);
    if (r == 0.0) continue;
    ++taken;
    const Point w{r * std::cos(a), r * std::sin(a)};
    const double ratio = ratio_oracle(u, v, w, 1.0);
    if (ratio > out.max_ratio) {
      out.max_ratio = ratio;
      out.argmax = w;
    }
  }
  return out;
}

SubgraphCheck subgraph_check(const ConeGraph& inner, const ConeGraph& outer) {
  if (inner.points() != outer.points()) {
    throw PreconditionError("subgraph check needs identical point sequences");
  }
  SubgraphCheck check;
  for (const auto& e : inner.edges()) {
    if (!outer.contains(e.tail, e.head)) check.violations.push_back(e);
  }
  check.ok = check.violations.empty();
  return check;
}

}  // namespace conespan
