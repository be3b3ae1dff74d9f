#pragma once

// Constructive paths that certify the spanner bounds: the greedy walk in the
// overlapping Yao graph and the trapezoid descent walk in TY with its
// potential audit.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "conespan/graph_build.hpp"

namespace conespan {

enum class StepKind { direct_ty_edge, oy_subpath, final_oy_subpath };

std::string to_string(StepKind kind);

/// One labeled step of the descent walk. Potentials are in frame units
/// (lengths divided by the frame scale |op|).
struct StepAudit {
  StepKind kind = StepKind::direct_ty_edge;
  int from = -1;
  int to = -1;
  /// Length of the edge or sub-path, in input units.
  double length = 0.0;
  double phi_before = 0.0;
  double phi_after = 0.0;
  /// Direction psi of the grown trapezoid in frame coordinates; NaN for the
  /// final step.
  double psi = 0.0;
};

struct PathTrace {
  std::vector<int> vertices;
  std::vector<StepAudit> steps;
  double total_length = 0.0;
};

/// Greedy path from u to v in OY_k: from the current vertex, take the cone
/// offset by pi/4 that contains v, follow the edge selected for the enclosing
/// widened cone, repeat. Each hop strictly decreases the distance to v.
///
/// Requires an overlapping_yao graph with k > 24. Throws InvariantError if an
/// expected edge is missing or the walk fails to make progress.
PathTrace oy_greedy_path(const ConeGraph& oy, int u, int v);

/// Placement of the unit trapezoid for the descent: apex at vertex `apex`,
/// orientation 2*pi*cone/K for the graph parameter K, optional reflection, and
/// scale |op|.
struct DescentFrame {
  int apex = -1;
  int cone = 0;
  bool reflected = false;
  double scale = 1.0;
};

/// Potential x + (2 tau + 1)|y| - accumulated, in frame units.
double phi_potential(Point local, double accumulated_length, double tau);

struct DescentTrace {
  PathTrace path;
  /// x_a + (2 tau_K + 1)|y_a| in input units.
  double bound = 0.0;
  double tau = 0.0;
  Point start_local;
  /// Every vertex visited stayed within y <= kRelTol in frame coordinates.
  bool stayed_in_lower_half = true;
  /// Every edge used, other than a direct edge a-o, is strictly shorter
  /// than |oa|.
  bool edges_shorter_than_start = true;
  /// Largest single-step increase of the potential (<= 0 when monotone).
  double max_phi_increase = 0.0;
};

/// Frame-unit local coordinates of `w` in the descent frame.
Point descent_local(const ConeGraph& graph, const DescentFrame& frame, Point w);

/// Walks from `a` to the frame apex o in TY_K, using OY_K sub-paths where the
/// grown trapezoid first touches a point off its critical arc.
///
/// Preconditions (reported by clause): TY_K and OY_K over the same points with
/// K > 24; the unit trapezoid placed by `frame` has no input point in its
/// interior; a satisfies 0 < x_a < 1, y_a <= 0 and 0 < phi(ap) < pi/6 in frame
/// coordinates.
DescentTrace ty_descent_path(const ConeGraph& ty, const ConeGraph& oy,
                             const DescentFrame& frame, int a);

struct DescentScenario {
  DescentFrame frame;
  int start = -1;
};

/// Collects (frame, start) configurations meeting the descent preconditions:
/// each trapezoidal Yao selection tail->head gives a frame with apex at the
/// tail and scale |tail head|, and every input point in the admissible region
/// below it becomes a start. Stops after `limit` scenarios.
std::vector<DescentScenario> harvest_descent_scenarios(
    const ConeGraph& ty, std::span<const TySelection> selections,
    std::size_t limit = SIZE_MAX);

}  // namespace conespan
