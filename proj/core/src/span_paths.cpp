#include "conespan/span_paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "conespan/analysis.hpp"

namespace conespan {
namespace {

void require(bool ok, const std::string& clause) {
  if (!ok) throw PreconditionError("precondition violated: " + clause);
}

void check_vertex(const ConeGraph& g, int v, const char* what) {
  require(v >= 0 && v < g.size(), std::string(what) + " is a vertex index");
}

// Edge selected by OY for widened cone j at `from`: the least candidate among
// out-edges whose head lies in that cone.
std::optional<Candidate> oy_selected(const ConeGraph& oy, int from, int j) {
  const int k = oy.k();
  const int span = gamma_span(k);
  const auto& pts = oy.points();
  std::optional<Candidate> best;
  for (const auto& e : oy.out_edges(from)) {
    const Angle phi = polar_angle(pts[from], pts[e.head]);
    const int offset = (cone_index(k, phi) - j + k) % k;
    if (offset >= span) continue;
    const Candidate c{e.length, phi.radians(), e.head};
    if (!best || c < *best) best = c;
  }
  return best;
}

// A descent step before its potentials are known.
struct RawStep {
  StepKind kind;
  int from;
  int to;
  double length;
  double psi;
  std::vector<int> vertices;  // includes both endpoints
};

}  // namespace

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::direct_ty_edge: return "direct_ty_edge";
    case StepKind::oy_subpath: return "oy_subpath";
    case StepKind::final_oy_subpath: return "final_oy_subpath";
  }
  return "direct_ty_edge";
}

PathTrace oy_greedy_path(const ConeGraph& oy, int u, int v) {
  require(oy.family() == Family::overlapping_yao,
          "graph is an overlapping Yao graph");
  require(oy.k() > 24, "k > 24");
  check_vertex(oy, u, "u");
  check_vertex(oy, v, "v");
  require(u != v, "u != v");

  const int k = oy.k();
  const auto& pts = oy.points();
  PathTrace trace;
  trace.vertices.push_back(u);
  int cur = u;
  int hops = 0;
  while (cur != v) {
    const double remaining = distance(pts[cur], pts[v]);
    const Angle phi = polar_angle(pts[cur], pts[v]);
    // v lies in C(2j*pi/k + pi/4, 2(j+1)*pi/k + pi/4), which sits inside the
    // widened cone j.
    const int j = cone_index(k, normalize_angle(phi.radians() - kPi / 4.0));
    const auto pick = oy_selected(oy, cur, j);
    if (!pick) {
      throw InvariantError("missing overlapping Yao edge from vertex " +
                           std::to_string(cur) + " in cone " +
                           std::to_string(j));
    }
    const int next = pick->index;
    if (next != v && !(distance(pts[next], pts[v]) < remaining)) {
      throw InvariantError("greedy path made no progress at vertex " +
                           std::to_string(cur));
    }
    trace.total_length += pick->key;
    trace.vertices.push_back(next);
    cur = next;
    if (++hops > oy.size()) {
      throw InvariantError("greedy path exceeded n hops");
    }
  }
  return trace;
}

double phi_potential(Point local, double accumulated_length, double tau) {
  if (!(tau >= 1.0)) throw PreconditionError("potential needs tau >= 1");
  return local.x + (2.0 * tau + 1.0) * std::abs(local.y) - accumulated_length;
}

Point descent_local(const ConeGraph& graph, const DescentFrame& frame,
                    Point w) {
  const int k = graph.k();
  const TrapezoidFrame placed(graph.points().at(frame.apex),
                              Angle(cone_lower(frame.cone, k)),
                              frame.reflected, theta(k));
  const Point l = to_local(placed, w);
  return {l.x / frame.scale, l.y / frame.scale};
}

DescentTrace ty_descent_path(const ConeGraph& ty, const ConeGraph& oy,
                             const DescentFrame& frame, int a) {
  require(ty.family() == Family::trapezoidal_yao,
          "first graph is a trapezoidal Yao graph");
  require(oy.family() == Family::overlapping_yao,
          "second graph is an overlapping Yao graph");
  require(ty.k() == oy.k(), "graphs share the parameter K");
  require(ty.k() > 24, "K > 24");
  require(ty.points() == oy.points(), "graphs share the point sequence");
  check_vertex(ty, frame.apex, "frame apex o");
  check_vertex(ty, a, "start a");
  require(a != frame.apex, "a != o");
  require(frame.cone >= 0 && frame.cone < ty.k(), "frame cone in [0, K)");
  require(frame.scale > 0.0 && std::isfinite(frame.scale),
          "frame scale is positive");

  const int k = ty.k();
  const int n = ty.size();
  const int o = frame.apex;
  const auto& pts = ty.points();
  const double th = theta(k);
  const double tau = tau_bound(k);
  auto local = [&](int w) { return descent_local(ty, frame, pts[w]); };

  const Point la = local(a);
  require(la.x > 0.0 && la.x < 1.0, "0 < x_a < 1");
  require(la.y <= 0.0, "y_a <= 0");
  const double phi_ap = std::atan2(-la.y, 1.0 - la.x);
  require(phi_ap > 0.0 && phi_ap < kPi / 6.0, "0 < phi(ap) < pi/6");
  // Same dilation test as the construction, so a head sitting on the
  // critical arc is not mistaken for an interior point.
  const TrapezoidFrame placed(pts[o], Angle(cone_lower(frame.cone, k)),
                              frame.reflected, th);
  for (int w = 0; w < n; ++w) {
    if (w == o) continue;
    const auto hit = scale_to_hit(placed, pts[w]);
    require(hit.part == HitPart::none ||
                hit.lambda >= frame.scale * (1.0 - kRelTol),
            "placed trapezoid has empty interior");
  }

  std::vector<RawStep> raw;
  DescentTrace out;
  out.tau = tau;
  out.start_local = la;

  int cur = a;
  int iterations = 0;
  while (cur != o) {
    const Point lu = local(cur);
    if (std::atan2(lu.y, lu.x) <= -kPi / 6.0) break;
    const Angle phi_uo = normalize_angle(std::atan2(-lu.y, -lu.x));
    // Least multiple of 2*pi/K strictly above phi(uo).
    const int step_cone = cone_index(k, phi_uo) + 1;
    const double psi = cone_lower(step_cone, k);
    // A reflected trapezoid at psi in frame coordinates is a reflected
    // frame at orientation o+psi globally, or an unreflected one at o-psi
    // when the descent frame itself is reflected.
    const int global_cone =
        frame.reflected ? ((frame.cone - step_cone) % k + k) % k
                        : (frame.cone + step_cone) % k;
    const TrapezoidFrame grown =
        ty_frame(pts[cur], k, global_cone, !frame.reflected);

    std::optional<Candidate> first;
    HitPart first_part = HitPart::none;
    for (int w = 0; w < n; ++w) {
      if (w == cur) continue;
      const HitResult hit = scale_to_hit(grown, pts[w]);
      if (hit.part == HitPart::none) continue;
      const Candidate c{hit.lambda, polar_angle(pts[cur], pts[w]).radians(), w};
      if (!first || c < *first) {
        first = c;
        first_part = hit.part;
      }
    }
    if (!first) {
      throw InvariantError("grown trapezoid at vertex " + std::to_string(cur) +
                           " touches no point");
    }
    const int next = first->index;
    RawStep step{StepKind::direct_ty_edge, cur, next, 0.0, psi, {}};
    if (first_part == HitPart::critical_arc) {
      if (!ty.contains(cur, next)) {
        throw InvariantError("trapezoidal Yao edge " + std::to_string(cur) +
                             "->" + std::to_string(next) + " is missing");
      }
      step.length = distance(pts[cur], pts[next]);
      step.vertices = {cur, next};
    } else {
      PathTrace sub = oy_greedy_path(oy, cur, next);
      step.kind = StepKind::oy_subpath;
      step.length = sub.total_length;
      step.vertices = std::move(sub.vertices);
    }
    raw.push_back(std::move(step));
    cur = next;
    if (local(cur).y > kRelTol) out.stayed_in_lower_half = false;
    if (++iterations > n) {
      throw InvariantError("descent walk exceeded n iterations");
    }
  }
  if (cur != o) {
    PathTrace sub = oy_greedy_path(oy, cur, o);
    raw.push_back({StepKind::final_oy_subpath, cur, o, sub.total_length,
                   std::numeric_limits<double>::quiet_NaN(),
                   std::move(sub.vertices)});
  }

  // l(u) is the remaining length to o, so potentials are filled backwards.
  PathTrace& path = out.path;
  path.vertices.push_back(a);
  for (const auto& s : raw) {
    path.vertices.insert(path.vertices.end(), s.vertices.begin() + 1,
                         s.vertices.end());
    path.total_length += s.length;
  }
  std::vector<double> remaining(raw.size() + 1, 0.0);
  for (std::size_t i = raw.size(); i-- > 0;) {
    remaining[i] = remaining[i + 1] + raw[i].length / frame.scale;
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    StepAudit audit;
    audit.kind = raw[i].kind;
    audit.from = raw[i].from;
    audit.to = raw[i].to;
    audit.length = raw[i].length;
    audit.psi = raw[i].psi;
    audit.phi_before = phi_potential(local(raw[i].from), remaining[i], tau);
    audit.phi_after = phi_potential(local(raw[i].to), remaining[i + 1], tau);
    out.max_phi_increase =
        std::max(out.max_phi_increase, audit.phi_after - audit.phi_before);
    path.steps.push_back(audit);
  }

  const double oa = distance(pts[o], pts[a]);
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const int p = path.vertices[i];
    const int q = path.vertices[i + 1];
    if (p == a && q == o) continue;  // the edge oa itself
    if (!(distance(pts[p], pts[q]) < oa)) {
      out.edges_shorter_than_start = false;
    }
  }
  out.bound = frame.scale * (la.x + (2.0 * tau + 1.0) * std::abs(la.y));
  return out;
}

std::vector<DescentScenario> harvest_descent_scenarios(
    const ConeGraph& ty, std::span<const TySelection> selections,
    std::size_t limit) {
  require(ty.family() == Family::trapezoidal_yao,
          "graph is a trapezoidal Yao graph");
  const auto& pts = ty.points();
  std::vector<DescentScenario> out;
  for (const auto& s : selections) {
    const DescentFrame frame{s.tail, s.cone, s.reflected,
                             distance(pts[s.tail], pts[s.head])};
    for (int w = 0; w < ty.size(); ++w) {
      if (w == s.tail) continue;
      const Point l = descent_local(ty, frame, pts[w]);
      if (!(l.x > 0.0 && l.x < 1.0 && l.y <= 0.0)) continue;
      const double phi_ap = std::atan2(-l.y, 1.0 - l.x);
      if (!(phi_ap > 0.0 && phi_ap < kPi / 6.0)) continue;
      out.push_back({frame, w});
      if (out.size() >= limit) return out;
    }
  }
  return out;
}

}  // namespace conespan
