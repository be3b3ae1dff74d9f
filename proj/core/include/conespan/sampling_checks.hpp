#pragma once

// Monte-Carlo checks of two curved-trapezoid facts: the sector cover used to
// embed the overlapping Yao graph in the trapezoidal one, and the lower
// half-plane containment used by the descent path.

#include <cstdint>
#include <optional>
#include <utility>

#include "conespan/geometry.hpp"

namespace conespan {

struct SampleCheck {
  bool passed = true;
  std::size_t samples = 0;
  /// First sampled point that violated the property, in global coordinates.
  std::optional<Point> counterexample;

  explicit operator bool() const { return passed; }
};

/// Samples the open unit sector {|w| < 1, 0 < phi(w) < gamma} and checks every
/// sample lies in T_theta or in rotation(T_theta reflected, gamma).
/// Requires theta in [pi/4, pi/3) and 2*theta >= gamma >= pi/2.
SampleCheck covers_sector_check(double theta, double gamma,
                                std::size_t n_samples, std::uint64_t seed);

/// Samples T' = u + |uv| * rotation(T_theta reflected, phi(uv)) and checks
/// that every sample outside T_theta has y <= kRelTol.
///
/// Preconditions (reported by clause on failure): u != v; y_u, y_v <= 0;
/// 0 < x_u < 1; |phi(uv) - pi| < pi/6; |ou| and |pv| in [|uv|, 1) with
/// o = (0,0), p = (1,0); theta in [pi/4, pi/3].
SampleCheck lhp_containment_check(Point u, Point v, double theta,
                                  std::size_t n_samples, std::uint64_t seed);

/// Draws a pair (u, v) meeting every precondition of lhp_containment_check,
/// by rejection from the given stream.
std::pair<Point, Point> sample_lhp_pair(std::uint64_t seed);

}  // namespace conespan
