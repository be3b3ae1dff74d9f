#pragma once

// Planar primitives: points, angles modulo 2*pi, cones, trapezoid frames and
// the first-contact computation for growing curved trapezoids.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace conespan {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Relative tolerance for comparisons of computed lengths.
inline constexpr double kRelTol = 1e-9;
/// Absolute tolerance for angular boundary diagnostics.
inline constexpr double kAngleTol = 1e-12;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant is observed to be broken, usually a
/// sign that an input graph was not produced by the matching construction.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Checked construction; rejects NaN and infinities.
Point make_point(double x, double y);

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

/// An angle kept in [0, 2*pi).
class Angle {
 public:
  constexpr Angle() = default;

  /// Normalizes `radians`; throws PreconditionError if not finite.
  explicit Angle(double radians);

  constexpr double radians() const { return radians_; }

  /// Counterclockwise difference `*this - other`, modulo 2*pi.
  Angle operator-(Angle other) const;
  Angle operator+(Angle other) const;

  friend constexpr bool operator==(Angle, Angle) = default;
  friend constexpr auto operator<=>(Angle a, Angle b) {
    return a.radians_ <=> b.radians_;
  }

 private:
  double radians_ = 0.0;
};

Angle normalize_angle(double radians);

/// Polar angle of the vector u->v. Throws PreconditionError when u == v.
Angle polar_angle(Point u, Point v);

/// Signed angle of the vector u->v in (-pi, pi].
double signed_polar_angle(Point u, Point v);

/// Lower boundary 2*pi*j/k of the j-th uniform cone. Every cone test in the
/// library goes through this one expression so boundaries compare bit-equal.
double cone_lower(int j, int k);

/// Unique j in [0,k) with phi in [2*pi*j/k, 2*pi*(j+1)/k).
int cone_index(int k, Angle phi);

/// Half-open cone with apex `apex`, start direction `lo` and angular width.
struct Cone {
  Point apex;
  Angle lo;
  double width = kTwoPi;

  Cone(Point apex, Angle lo, double width);

  /// Membership of a direction: (phi - lo) mod 2*pi in [0, width).
  bool contains(Angle phi) const;
  /// Membership of a point; the apex itself is never inside.
  bool contains(Point w) const;
};

/// Number of uniform cones spanned by the widened cone, ceil(k/4).
int gamma_span(int k);
/// Widened cone width ceil(k/4) * 2*pi/k, the least multiple of 2*pi/k that is
/// at least pi/2.
double gamma(int k);

/// Number of uniform cones spanned by the trapezoid angle, ceil(k/8).
int theta_span(int k);
/// Trapezoid angle ceil(k/8) * 2*pi/k; requires k > 24.
double theta(int k);

/// Placement of the unit curved trapezoid: translation to `apex`, rotation by
/// `orientation`, optionally preceded by a reflection through the x-axis.
struct TrapezoidFrame {
  Point apex;
  Angle orientation;
  bool reflected = false;
  double theta = kPi / 4.0;

  TrapezoidFrame(Point apex, Angle orientation, bool reflected, double theta);
};

/// Global point -> frame-local coordinates.
Point to_local(const TrapezoidFrame& frame, Point w);
/// Frame-local coordinates -> global point.
Point to_global(const TrapezoidFrame& frame, Point local);

/// Membership in the open unit curved trapezoid
/// { 0<x<1, 0<y<sin(theta), |(x,y)|<1, |(x-1,y)|<1 }.
bool in_unit_trapezoid(Point local, double theta);

// `bottom` exists for report compatibility only: the bottom side is open and
// its first contact is always the corner p, which belongs to the critical arc.
enum class HitPart { critical_arc, near_arc, top, bottom, none };

std::string to_string(HitPart part);

struct HitResult {
  double lambda = 0.0;
  HitPart part = HitPart::none;
};

/// Smallest dilation lambda at which the closed trapezoid apex + lambda*frame
/// contains `w`, and the boundary piece that touches it first.
///
/// In local coordinates (x, y) the point can only ever be reached when x > 0
/// and y >= 0; then lambda = max(|w|, y / sin(theta), |w|^2 / (2x)). The
/// critical arc wins ties within kRelTol and its lambda is reported as the
/// exact Euclidean distance. The bottom side is open, so points on the
/// orientation ray are reached at the corner p and count as critical-arc hits.
///
/// The orientation ray itself is attributed to the counterclockwise side, the
/// same convention as half-open cones: for a reflected frame (whose reachable
/// half-plane lies clockwise of the ray) points exactly on the ray report
/// HitPart::none.
///
/// Throws PreconditionError if `w` coincides with the apex.
HitResult scale_to_hit(const TrapezoidFrame& frame, Point w);

/// Same as scale_to_hit, from the polar description (dist, phi) of apex->w.
HitResult scale_to_hit_polar(const TrapezoidFrame& frame, double dist,
                             Angle phi);

}  // namespace conespan
