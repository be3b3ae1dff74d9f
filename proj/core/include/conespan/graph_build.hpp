#pragma once

// Directed cone graphs over planar point sets: Yao, Yao-Yao, overlapping Yao
// and trapezoidal Yao.
//
// All four constructions share one total order on candidates:
// (distance or dilation, polar angle from the apex, candidate index), compared
// lexicographically. Using the same order everywhere keeps YY_k within Y_k and
// OY_k within TY_k exactly, ties included.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conespan/geometry.hpp"

namespace conespan {

enum class Family { yao, yao_yao, overlapping_yao, trapezoidal_yao };

/// Short names used on the command line and in files: yao, yy, oy, ty.
std::string to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

struct DirectedEdge {
  int tail = -1;
  int head = -1;
  double length = 0.0;

  friend bool operator==(const DirectedEdge& a, const DirectedEdge& b) {
    return a.tail == b.tail && a.head == b.head;
  }
  friend auto operator<=>(const DirectedEdge& a, const DirectedEdge& b) {
    if (auto c = a.tail <=> b.tail; c != 0) return c;
    return a.head <=> b.head;
  }
};

/// An immutable point set with a directed edge set.
///
/// Edges are stored sorted by (tail, head) without duplicates; lengths are
/// recomputed from the coordinates on construction.
class ConeGraph {
 public:
  ConeGraph(std::vector<Point> points, int k, Family family,
            std::vector<DirectedEdge> edges);

  const std::vector<Point>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }
  int k() const { return k_; }
  Family family() const { return family_; }
  const std::vector<DirectedEdge>& edges() const { return edges_; }

  std::span<const DirectedEdge> out_edges(int tail) const;
  bool contains(int tail, int head) const;

  /// Copy with the directed edge tail->head removed (no-op if absent).
  ConeGraph without_edge(int tail, int head) const;

 private:
  std::vector<Point> points_;
  int k_;
  Family family_;
  std::vector<DirectedEdge> edges_;
  std::vector<std::size_t> offsets_;
};

/// Ordering key for "nearest" selections. `key` is a distance, or the
/// dilation factor for trapezoid growth.
struct Candidate {
  double key = 0.0;
  double angle = 0.0;
  int index = -1;

  friend std::partial_ordering operator<=>(const Candidate& a,
                                          const Candidate& b) {
    if (auto c = a.key <=> b.key; c != 0) return c;
    if (auto c = a.angle <=> b.angle; c != 0) return c;
    return a.index <=> b.index;
  }
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Throws PreconditionError on non-finite coordinates or duplicate points.
void validate_points(std::span<const Point> points);

ConeGraph build_yao(std::span<const Point> points, int k);
ConeGraph build_yao_yao(std::span<const Point> points, int k);
/// Allowed for any k >= 1; the spanner guarantee needs k > 24.
ConeGraph build_oy(std::span<const Point> points, int k);
/// Requires k > 24.
ConeGraph build_ty(std::span<const Point> points, int k);

/// Frame of the trapezoidal Yao construction for cone j at `apex`:
/// orientation 2*pi*j/k, reflected or not, trapezoid angle theta(k).
TrapezoidFrame ty_frame(Point apex, int k, int j, bool reflected);

/// One selection made by the trapezoidal Yao construction, with the frame
/// that produced it. The same edge can be selected by several frames.
struct TySelection {
  int tail = -1;
  int head = -1;
  int cone = 0;
  bool reflected = false;
};

/// All critical-arc selections of TY_k in (tail, cone, reflected) order.
std::vector<TySelection> ty_selections(std::span<const Point> points, int k);

ConeGraph build_graph(Family family, std::span<const Point> points, int k);

}  // namespace conespan
